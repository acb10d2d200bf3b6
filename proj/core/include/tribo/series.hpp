#pragma once

// Power series over Q truncated after x^order.

#include <cstddef>
#include <vector>

#include "tribo/rational.hpp"

namespace tribo {

class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Missing coefficients are zero; coefficients past `order` are dropped.
  TruncSeries(std::vector<Rational> coeffs, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Results are truncated to the smaller of the two orders.
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// a / b for b with nonzero constant term; throws std::domain_error.
  TruncSeries divided_by(const TruncSeries& b) const;
  /// Formal derivative; its order is one less.
  TruncSeries derivative() const;
  /// Multiplication by x^k at the same order.
  TruncSeries shifted(std::size_t k) const;
  TruncSeries truncated(std::size_t order) const;

 private:
  std::vector<Rational> coeffs_;
};

/// T(x) = x / (1 - x - x^2 - x^3), the ordinary generating function of the
/// Tribonacci numbers.
TruncSeries series_T(std::size_t order);

struct SeriesRelation {
  TruncSeries lhs;
  TruncSeries rhs;
};

/// T'(x) against (1 + x^2 + 2x^3) / (1 - x - x^2 - x^3)^2, both to order N-1.
SeriesRelation first_derivative_relation(std::size_t order);
/// (2 + 6x + 12x^2 + 6x^4 + 6x^5) T(x)^3 against x^3 T''(x), to order N.
SeriesRelation second_derivative_relation(std::size_t order);

/// Both relations hold. Throws IndexTooSmall for order < 6.
bool series_check_derivatives(std::size_t order);

}  // namespace tribo
