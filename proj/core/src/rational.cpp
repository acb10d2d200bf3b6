#include "tribo/rational.hpp"

#include <stdexcept>

namespace tribo {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer parse_integer(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  std::string s = first == std::string_view::npos ? "" : std::string(text.substr(first, last - first + 1));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const std::size_t digits_from = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() == digits_from) {
    throw std::invalid_argument("empty integer literal");
  }
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
  }
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return make_rational(num, den);
}

std::string factor_string(const Integer& z) {
  if (z == 0) return "0";
  Integer rest = abs(z);
  std::string out = z < 0 ? "-" : "";
  bool first = true;
  auto emit = [&](const std::string& factor) {
    if (!first) out += '*';
    out += factor;
    first = false;
  };
  for (unsigned long p = 2; p < 1000 && rest > 1; ++p) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    if (exponent == 1) emit(std::to_string(p));
    if (exponent > 1) emit(std::to_string(p) + "^" + std::to_string(exponent));
  }
  if (rest > 1 || first) emit(rest.get_str(10));
  return out;
}

}  // namespace tribo
