#include "tribo/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tribo/errors.hpp"

namespace tribo {

TruncSeries::TruncSeries(std::vector<Rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = a[k] + b[k];
  return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = a[k] - b[k];
  return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += a[i] * b[j];
  }
  return out;
}

TruncSeries TruncSeries::divided_by(const TruncSeries& b) const {
  if (b[0] == 0) throw std::domain_error("series division by a non-unit");
  TruncSeries out(std::min(order(), b.order()));
  const Rational inv_lead = Rational(1) / b[0];
  for (std::size_t n = 0; n <= out.order(); ++n) {
    Rational acc = coeffs_[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= b[k] * out.coeffs_[n - k];
    out.coeffs_[n] = acc * inv_lead;
  }
  return out;
}

TruncSeries TruncSeries::derivative() const {
  if (order() == 0) throw std::domain_error("derivative of an order-0 series is undefined");
  TruncSeries out(order() - 1);
  for (std::size_t k = 1; k <= order(); ++k) {
    out.coeffs_[k - 1] = coeffs_[k] * Integer(static_cast<unsigned long>(k));
  }
  return out;
}

TruncSeries TruncSeries::shifted(std::size_t k) const {
  TruncSeries out(order());
  for (std::size_t i = 0; i + k <= order(); ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

TruncSeries TruncSeries::truncated(std::size_t new_order) const {
  return TruncSeries(coeffs_, std::min(order(), new_order));
}

namespace {

TruncSeries poly(std::initializer_list<int> c, std::size_t order) {
  std::vector<Rational> coeffs;
  for (int v : c) coeffs.emplace_back(v);
  return TruncSeries(std::move(coeffs), order);
}

}  // namespace

TruncSeries series_T(std::size_t order) {
  return poly({0, 1}, order).divided_by(poly({1, -1, -1, -1}, order));
}

SeriesRelation first_derivative_relation(std::size_t order) {
  const std::size_t n = order - 1;
  const TruncSeries denom = poly({1, -1, -1, -1}, n);
  const TruncSeries rhs = poly({1, 0, 1, 2}, n).divided_by(denom * denom);
  return {series_T(order).derivative(), rhs};
}

SeriesRelation second_derivative_relation(std::size_t order) {
  // T'' is known to order N-2, so x^3 T'' is known to order N+1.
  const TruncSeries t = series_T(order + 2);
  const TruncSeries lhs = poly({2, 6, 12, 0, 6, 6}, order) * t * t * t;
  const TruncSeries rhs = t.derivative().derivative().truncated(order).shifted(3);
  return {lhs.truncated(order), rhs};
}

bool series_check_derivatives(std::size_t order) {
  if (order < 6) {
    throw IndexTooSmall("series check needs order >= 6, got " + std::to_string(order));
  }
  const auto first = first_derivative_relation(order);
  const auto second = second_derivative_relation(order);
  return first.lhs == first.rhs && second.lhs == second.rhs;
}

}  // namespace tribo
