#pragma once

// Exact arithmetic in the cubic field K = Q[x]/(x^3 - x^2 - x - 1).
//
// Elements are stored in the power basis (1, x, x^2), always reduced, so two
// elements are equal iff their coefficients are. The three embeddings send x
// to the roots alpha (real, ~1.8393), beta and gamma (complex conjugates,
// beta with positive imaginary part). Every per-root coefficient of a
// Binet-type formula is one element of K seen through these embeddings.

#include <array>
#include <complex>
#include <cstddef>
#include <string>

#include "tribo/rational.hpp"

namespace tribo {

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Rational a0, Rational a1 = 0, Rational a2 = 0);

  static FieldElement constant(const Rational& k) { return FieldElement(k); }
  /// The class of x, i.e. alpha / beta / gamma under the embeddings.
  static FieldElement generator() { return FieldElement(0, 1, 0); }

  const std::array<Rational, 3>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept { return coeffs_[1] == 0 && coeffs_[2] == 0; }

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator*=(const Rational& k);

  friend FieldElement operator+(FieldElement p, const FieldElement& q) { return p += q; }
  friend FieldElement operator-(FieldElement p, const FieldElement& q) { return p -= q; }
  friend FieldElement operator*(FieldElement p, const FieldElement& q) { return p *= q; }
  friend FieldElement operator*(FieldElement p, const Rational& k) { return p *= k; }
  friend FieldElement operator*(const Rational& k, FieldElement p) { return p *= k; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& p, const FieldElement& q) {
    return p.coeffs_ == q.coeffs_;
  }

  FieldElement pow(unsigned long exponent) const;

  /// "(a0, a1, a2)" with exact rational strings.
  std::string to_string() const;

 private:
  std::array<Rational, 3> coeffs_{};
};

/// Throws ZeroElement for q == 0.
FieldElement inverse(const FieldElement& q);

/// Column j holds the coordinates of q * x^j, so the matrix acts on
/// coordinate vectors as multiplication by q.
std::array<std::array<Rational, 3>, 3> multiplication_matrix(const FieldElement& q);

/// q(alpha) + q(beta) + q(gamma) = 3 a0 + a1 + 3 a2.
Rational trace(const FieldElement& q);

/// q(alpha) q(beta) q(gamma), as the resultant of the minimal polynomial
/// with the lift of q.
Rational norm(const FieldElement& q);

/// 1 / (-x^2 + 4x - 1) = (-2/11, -3/22, 5/22); its embeddings are c1, c2, c3.
FieldElement c_element();

/// (1/44)(-1 + 4x - x^2); its embeddings are c2 c3, c3 c1, c1 c2.
FieldElement cofactor_element();

/// (-1 + 4x - x^2); the coefficient multiplying c_element to give 1.
FieldElement binet_denominator();

/// Minimal polynomial value at a rational point.
Rational minimal_polynomial_at(const Rational& t);

struct RootInterval {
  Rational lower;
  Rational upper;

  Rational width() const { return upper - lower; }
};

/// (11/6, 15/8); the minimal polynomial is negative at the left end and
/// positive at the right end.
RootInterval initial_root_interval();

/// Halves the interval `steps` times, keeping the sign change inside.
RootInterval refine(RootInterval interval, unsigned steps);

/// Exact test that q(alpha) = 0, via gcd of the lift of q with the minimal
/// polynomial.
bool vanishes_at_root(const FieldElement& q);

/// Exact sign of q(alpha). Throws ZeroAtRoot when q(alpha) = 0.
int sign_at_real_root(const FieldElement& q);

/// Same as sign_at_real_root, also returning the interval that certified it.
int sign_at_real_root(const FieldElement& q, RootInterval& certificate);

/// Floating-point images under (alpha, beta, gamma). Display only.
std::array<std::complex<double>, 3> float_embeddings(const FieldElement& q);

/// Floating-point roots (alpha, beta, gamma) with Im(beta) > 0.
std::array<std::complex<double>, 3> float_roots();

}  // namespace tribo
