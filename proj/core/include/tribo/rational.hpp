#pragma once

// Arbitrary-precision scalars shared by every module.
//
// Integer and Rational are GMP's C++ classes. mpq_class keeps itself in
// lowest terms after every arithmetic operation; values built by hand go
// through make_rational() so the invariant also holds there.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tribo {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator. Throws
/// std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

bool is_integer(const Rational& q);

/// Decimal string: "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Display form such as "2^8*11^6" or "-2*3^2*7". Trial division by small
/// primes; any cofactor that survives is printed as-is.
std::string factor_string(const Integer& z);

}  // namespace tribo
