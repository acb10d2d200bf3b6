#include "tribo/sequences.hpp"

#include <stdexcept>

#include "linalg.hpp"
#include "tribo/errors.hpp"

namespace tribo {

std::string InitTriple::to_string() const {
  return "(" + tribo::to_string(s0) + "," + tribo::to_string(s1) + "," + tribo::to_string(s2) + ")";
}

InitTriple parse_triple(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  std::array<Integer, 3> parts;
  std::size_t field = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') continue;
    if (field == 3) throw std::invalid_argument("triple has more than three entries");
    parts[field++] = parse_integer(text.substr(start, i - start));
    start = i + 1;
  }
  if (field != 3) throw std::invalid_argument("triple needs exactly three entries");
  return {parts[0], parts[1], parts[2]};
}

Rational ScaledSeq::term(std::size_t k) const {
  return Rational(make_seq(triple).term(k)) / scale;
}

std::vector<Rational> ScaledSeq::prefix(std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (const auto& t : make_seq(triple).prefix(count)) out.emplace_back(Rational(t) / scale);
  return out;
}

std::array<Rational, 3> initial_traces(const FieldElement& q) {
  const FieldElement xq = q * FieldElement::generator();
  const FieldElement x2q = xq * FieldElement::generator();
  return {trace(q), trace(xq), trace(x2q)};
}

Rational egf_rational_term(const FieldElement& q, std::size_t k) {
  return RationalTriboSeq(initial_traces(q)).term(k);
}

std::vector<Rational> egf_rational_prefix(const FieldElement& q, std::size_t count) {
  return RationalTriboSeq(initial_traces(q)).prefix(count);
}

FieldElement element_from_traces(const std::array<Rational, 3>& traces) {
  // trace(x^(i+j)) for i + j = 0..4: the Hankel matrix of the trace form
  const Rational t[5] = {3, 1, 3, 7, 11};
  detail::Matrix3 gram{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gram[i][j] = t[i + j];
  const auto a = detail::solve3(gram, traces);
  if (!a) throw std::logic_error("trace form is singular");
  return FieldElement((*a)[0], (*a)[1], (*a)[2]);
}

FieldElement element_of(const ScaledSeq& s) {
  const auto v = s.triple.values();
  return element_from_traces({Rational(v[0]) / s.scale, Rational(v[1]) / s.scale,
                              Rational(v[2]) / s.scale});
}

ScaledSeq normalize_egf(const FieldElement& q) {
  if (q.is_zero()) throw ZeroAtRoot();
  const auto t = initial_traces(q);
  Integer common_den = 1;
  for (const auto& v : t) common_den = lcm(common_den, v.get_den());
  std::array<Integer, 3> u;
  Integer content = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    const Rational scaled = t[j] * common_den;
    u[j] = scaled.get_num();
    content = gcd(content, u[j]);
  }
  Rational scale = make_rational(common_den, content);
  for (auto& v : u) v /= content;
  if (sign_at_real_root(q) < 0) {
    scale = -scale;
    for (auto& v : u) v = -v;
  }
  return {scale, {u[0], u[1], u[2]}};
}

std::optional<std::size_t> binet_mismatch(const ScaledSeq& scaled, const FieldElement& q,
                                          std::size_t k_max) {
  const auto integers = make_seq(scaled.triple).prefix(k_max + 1);
  const auto traces = egf_rational_prefix(q, k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (Rational(integers[k]) != scaled.scale * traces[k]) return k;
  }
  return std::nullopt;
}

}  // namespace tribo
