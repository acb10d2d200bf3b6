#include "tribo/field.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "tribo/errors.hpp"

namespace tribo {

namespace {

// Dense polynomial over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly minimal_polynomial() { return {Rational(-1), Rational(-1), Rational(-1), Rational(1)}; }

Poly lift(const FieldElement& q) {
  Poly p(q.coeffs().begin(), q.coeffs().end());
  trim(p);
  return p;
}

// a = quotient * b + remainder; b must be nonzero.
Poly remainder(Poly a, const Poly& b) {
  const int db = degree(b);
  while (degree(a) >= db) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rational resultant(const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return 0;
  const int df = degree(f);
  const int dg = degree(g);
  if (df == 0) return pow(f[0], static_cast<unsigned long>(dg));
  if (dg == 0) return pow(g[0], static_cast<unsigned long>(df));
  const Rational sign = ((df * dg) % 2 == 0) ? 1 : -1;
  if (df < dg) return sign * resultant(g, f);
  const Poly r = remainder(f, g);
  if (r.empty()) return 0;
  const int dr = degree(r);
  // Res(f, g) = (-1)^(df dg) Res(g, f) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
  return sign * pow(g.back(), static_cast<unsigned long>(df - dr)) * resultant(g, r);
}

struct Interval {
  Rational lo;
  Rational hi;
};

Interval scaled(const Rational& k, const Rational& lo, const Rational& hi) {
  if (k >= 0) return {k * lo, k * hi};
  return {k * hi, k * lo};
}

// Range of a0 + a1 t + a2 t^2 over t in [lower, upper] with lower > 0.
Interval evaluate(const FieldElement& q, const RootInterval& t) {
  const auto& a = q.coeffs();
  const Interval linear = scaled(a[1], t.lower, t.upper);
  const Interval quadratic = scaled(a[2], t.lower * t.lower, t.upper * t.upper);
  return {a[0] + linear.lo + quadratic.lo, a[0] + linear.hi + quadratic.hi};
}

}  // namespace

FieldElement::FieldElement(Rational a0, Rational a1, Rational a2)
    : coeffs_{std::move(a0), std::move(a1), std::move(a2)} {
  for (auto& c : coeffs_) c.canonicalize();
}

bool FieldElement::is_zero() const noexcept {
  return coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  for (std::size_t i = 0; i < 3; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  for (std::size_t i = 0; i < 3; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  std::array<Rational, 5> prod{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < 3; ++j) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  // x^3 = 1 + x + x^2, x^4 = 1 + 2x + 2x^2
  coeffs_[0] = prod[0] + prod[3] + prod[4];
  coeffs_[1] = prod[1] + prod[3] + 2 * prod[4];
  coeffs_[2] = prod[2] + prod[3] + 2 * prod[4];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

FieldElement FieldElement::operator-() const {
  return FieldElement(-coeffs_[0], -coeffs_[1], -coeffs_[2]);
}

FieldElement FieldElement::pow(unsigned long exponent) const {
  FieldElement result(1);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string FieldElement::to_string() const {
  return "(" + tribo::to_string(coeffs_[0]) + ", " + tribo::to_string(coeffs_[1]) + ", " +
         tribo::to_string(coeffs_[2]) + ")";
}

std::array<std::array<Rational, 3>, 3> multiplication_matrix(const FieldElement& q) {
  std::array<std::array<Rational, 3>, 3> m{};
  FieldElement column = q;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) m[i][j] = column[i];
    column *= FieldElement::generator();
  }
  return m;
}

FieldElement inverse(const FieldElement& q) {
  if (q.is_zero()) throw ZeroElement();
  const auto solution =
      detail::solve3(multiplication_matrix(q), {Rational(1), Rational(0), Rational(0)});
  // K is a field, so the multiplication matrix of a nonzero element is invertible.
  if (!solution) throw ZeroElement();
  return FieldElement((*solution)[0], (*solution)[1], (*solution)[2]);
}

Rational trace(const FieldElement& q) {
  // power sums of the roots: p0 = 3, p1 = e1 = 1, p2 = e1 p1 - 2 e2 = 3
  return 3 * q[0] + q[1] + 3 * q[2];
}

Rational norm(const FieldElement& q) { return resultant(minimal_polynomial(), lift(q)); }

FieldElement binet_denominator() { return FieldElement(-1, 4, -1); }

FieldElement c_element() { return inverse(binet_denominator()); }

FieldElement cofactor_element() { return binet_denominator() * Rational(1, 44); }

Rational minimal_polynomial_at(const Rational& t) {
  return ((t - 1) * t - 1) * t - 1;
}

RootInterval initial_root_interval() { return {Rational(11, 6), Rational(15, 8)}; }

RootInterval refine(RootInterval interval, unsigned steps) {
  for (unsigned i = 0; i < steps; ++i) {
    Rational mid = (interval.lower + interval.upper) / 2;
    // the minimal polynomial has no rational roots, so mid is never alpha
    if (minimal_polynomial_at(mid) < 0) {
      interval.lower = std::move(mid);
    } else {
      interval.upper = std::move(mid);
    }
  }
  return interval;
}

bool vanishes_at_root(const FieldElement& q) {
  if (q.is_zero()) return true;
  return degree(poly_gcd(minimal_polynomial(), lift(q))) > 0;
}

int sign_at_real_root(const FieldElement& q, RootInterval& certificate) {
  if (vanishes_at_root(q)) throw ZeroAtRoot();
  RootInterval interval = initial_root_interval();
  unsigned batch = 4;
  for (;;) {
    const Interval range = evaluate(q, interval);
    if (range.lo > 0 || range.hi < 0) {
      certificate = interval;
      return range.lo > 0 ? 1 : -1;
    }
    interval = refine(interval, batch);
    batch *= 2;
  }
}

int sign_at_real_root(const FieldElement& q) {
  RootInterval unused;
  return sign_at_real_root(q, unused);
}

std::array<std::complex<double>, 3> float_roots() {
  long double alpha = 1.84L;
  for (int i = 0; i < 60; ++i) {
    const long double f = ((alpha - 1) * alpha - 1) * alpha - 1;
    const long double df = (3 * alpha - 2) * alpha - 1;
    alpha -= f / df;
  }
  // beta + gamma = 1 - alpha, beta gamma = 1 / alpha
  const long double sum = 1 - alpha;
  const long double disc = sum * sum - 4 / alpha;
  const long double re = sum / 2;
  const long double im = std::sqrt(-disc) / 2;
  return {std::complex<double>(static_cast<double>(alpha), 0.0),
          std::complex<double>(static_cast<double>(re), static_cast<double>(im)),
          std::complex<double>(static_cast<double>(re), static_cast<double>(-im))};
}

std::array<std::complex<double>, 3> float_embeddings(const FieldElement& q) {
  const auto roots = float_roots();
  std::array<std::complex<double>, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto r = roots[i];
    out[i] = q[0].get_d() + q[1].get_d() * r + q[2].get_d() * r * r;
  }
  return out;
}

}  // namespace tribo
