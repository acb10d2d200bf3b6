#pragma once

#include <array>
#include <optional>
#include <utility>

#include "tribo/rational.hpp"

namespace tribo::detail {

using Matrix3 = std::array<std::array<Rational, 3>, 3>;
using Vector3 = std::array<Rational, 3>;

// Gauss-Jordan elimination over Q. Empty result when the matrix is singular.
inline std::optional<Vector3> solve3(Matrix3 a, Vector3 b) {
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && a[pivot][col] == 0) ++pivot;
    if (pivot == 3) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational scale = Rational(1) / a[col][col];
    for (auto& v : a[col]) v *= scale;
    b[col] *= scale;
    for (std::size_t row = 0; row < 3; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = 0; k < 3; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

}  // namespace tribo::detail
