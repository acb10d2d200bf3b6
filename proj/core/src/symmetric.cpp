#include "tribo/symmetric.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace tribo {

SymCoeffs3 coeffs3(const SymParams3& p) {
  return {p.D - 2, -3 * p.D + 6, -p.D + 3};
}

SymCoeffs4 coeffs4(const SymParams4& p) {
  return {-p.D + p.E + p.G + p.H - 3, -p.E - 2 * p.G - p.H + 4, -2 * p.D - 2 * p.G - 2 * p.H + 6,
          4 * p.D - p.E + 2 * p.G - p.H};
}

SymCoeffs5 coeffs5(const SymParams5& p) {
  SymCoeffs5 c;
  c.A = p.I + 2 * p.L + 2 * p.N + p.P + 2 * p.Q + 6 * p.R + 4 * p.S - 14;
  c.B = -2 * p.D - 2 * p.N - 5 * p.P - 2 * p.Q - 6 * p.R - 12 * p.S + 30;
  c.C = -p.D - p.I - 2 * p.L - 2 * p.P - 3 * p.Q - 6 * p.R - 7 * p.S + 20;
  c.E = -p.I - 2 * p.L - p.N - p.Q - 3 * p.R - p.S + 5;
  c.H = -p.L - 2 * p.N - p.P - p.Q - 4 * p.R - 3 * p.S + 10;
  return c;
}

unsigned degree_of(const SymParams& p) { return static_cast<unsigned>(p.index()) + 3; }

namespace {

struct Symmetric {
  Rational p1, p2, p3, p4, p5, e2, e3;
};

Symmetric symmetric_of(const Rational& a, const Rational& b, const Rational& c) {
  Symmetric s;
  const Rational a2 = a * a, b2 = b * b, c2 = c * c;
  const Rational a3 = a2 * a, b3 = b2 * b, c3 = c2 * c;
  s.p1 = a + b + c;
  s.p2 = a2 + b2 + c2;
  s.p3 = a3 + b3 + c3;
  s.p4 = a3 * a + b3 * b + c3 * c;
  s.p5 = a3 * a2 + b3 * b2 + c3 * c2;
  s.e2 = a * b + b * c + c * a;
  s.e3 = a * b * c;
  return s;
}

Rational rhs(const SymParams3& p, const Symmetric& s) {
  const auto k = coeffs3(p);
  return k.A * s.p3 + k.B * s.e3 + k.C * s.p2 * s.p1 + p.D * s.e2 * s.p1;
}

Rational rhs(const SymParams4& p, const Symmetric& s) {
  const auto k = coeffs4(p);
  const Rational p1sq = s.p1 * s.p1;
  return k.A * s.p4 + k.C * s.p3 * s.p1 + p.D * s.p2 * s.p2 + p.E * s.p2 * s.e2 +
         k.F * s.e2 * s.e2 + p.G * s.p2 * p1sq + p.H * s.e2 * p1sq + k.I * s.e3 * s.p1;
}

Rational rhs(const SymParams5& p, const Symmetric& s) {
  const auto k = coeffs5(p);
  const Rational p1sq = s.p1 * s.p1;
  const Rational p1cu = p1sq * s.p1;
  Rational out = k.A * s.p5;
  out += k.B * s.e3 * s.e2;
  out += k.C * s.e3 * s.p2;
  out += p.D * s.e3 * p1sq;
  out += k.E * s.p4 * s.p1;
  out += k.H * s.p3 * s.p2;
  out += p.I * s.p3 * s.e2;
  out += p.L * s.p3 * p1sq;
  out += p.N * s.p2 * s.p2 * s.p1;
  out += p.P * s.e2 * s.e2 * s.p1;
  out += p.Q * s.p2 * s.e2 * s.p1;
  out += p.R * s.p2 * p1cu;
  out += p.S * s.e2 * p1cu;
  return out;
}

Rational draw(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 21) - 10;
  const long den = static_cast<long>(rng() % 10) + 1;
  return make_rational(num, den);
}

}  // namespace

Rational sym_rhs(const SymParams& p, const Rational& a, const Rational& b, const Rational& c) {
  const Symmetric s = symmetric_of(a, b, c);
  return std::visit([&](const auto& params) { return rhs(params, s); }, p);
}

SymCheck certify_sym_identity(unsigned degree, const SymParams& p, unsigned grid) {
  if (degree != degree_of(p)) {
    throw std::invalid_argument("parameter set does not match degree " + std::to_string(degree));
  }
  if (grid <= degree) {
    throw std::invalid_argument("grid size must exceed the degree");
  }
  SymCheck result;
  for (long a = 0; a < static_cast<long>(grid); ++a) {
    for (long b = 0; b < static_cast<long>(grid); ++b) {
      for (long c = 0; c < static_cast<long>(grid); ++c) {
        const Rational lhs = pow(Rational(a + b + c), degree);
        const Rational value = sym_rhs(p, a, b, c);
        if (lhs != value) {
          result.holds = false;
          result.counterexample = {a, b, c};
          result.lhs = lhs;
          result.rhs = value;
          return result;
        }
      }
    }
  }
  return result;
}

SymParams random_sym_params(unsigned degree, std::mt19937_64& rng) {
  switch (degree) {
    case 3:
      return SymParams3{draw(rng)};
    case 4: {
      SymParams4 p;
      p.D = draw(rng);
      p.E = draw(rng);
      p.G = draw(rng);
      p.H = draw(rng);
      return p;
    }
    case 5: {
      SymParams5 p;
      for (Rational* v : {&p.D, &p.I, &p.L, &p.N, &p.P, &p.Q, &p.R, &p.S}) *v = draw(rng);
      return p;
    }
    default:
      throw std::invalid_argument("symmetric expansions exist for degrees 3, 4 and 5");
  }
}

std::string describe(const SymParams& p) {
  std::vector<std::pair<const char*, const Rational*>> named;
  if (const auto* p3 = std::get_if<SymParams3>(&p)) {
    named = {{"D", &p3->D}};
  } else if (const auto* p4 = std::get_if<SymParams4>(&p)) {
    named = {{"D", &p4->D}, {"E", &p4->E}, {"G", &p4->G}, {"H", &p4->H}};
  } else {
    const auto& p5 = std::get<SymParams5>(p);
    named = {{"D", &p5.D}, {"I", &p5.I}, {"L", &p5.L}, {"N", &p5.N},
             {"P", &p5.P}, {"Q", &p5.Q}, {"R", &p5.R}, {"S", &p5.S}};
  }
  std::string out;
  for (const auto& [name, value] : named) {
    if (!out.empty()) out += ", ";
    out += std::string(name) + "=" + to_string(*value);
  }
  return out;
}

}  // namespace tribo
