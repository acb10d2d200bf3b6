#pragma once

// Ordinary (Cauchy) and binomial convolution of exact sequences.
//
//   plain:        (f * g)_n = sum_k f_k g_{n-k}
//   binomial:     (f # g)_n = sum_k C(n, k) f_k g_{n-k}
//
// Iterating the binomial product over r factors yields the multinomial sum
// over compositions k_1 + ... + k_r = n, i.e. the EGF product. Kernels work
// on materialized prefixes and return every index up to the shortest input.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tribo/rational.hpp"
#include "tribo/sequences.hpp"

namespace tribo {

/// Pascal rows, grown on demand. One table per verification run.
class BinomialTable {
 public:
  const Integer& operator()(std::size_t n, std::size_t k);
  const std::vector<Integer>& row(std::size_t n);

 private:
  std::vector<std::vector<Integer>> rows_{{Integer(1)}};
};

/// base^k * term_k of a Tribonacci-type sequence. Without a sequence the
/// terms are all 1, which models the factor e^(base x) of an EGF.
struct WeightedSeq {
  std::optional<InitTriple> seq;
  Integer base = 1;

  static WeightedSeq of(const InitTriple& t, const Integer& base = 1) { return {t, base}; }
  static WeightedSeq unit(const Integer& base = 1) { return {std::nullopt, base}; }

  std::vector<Integer> prefix(std::size_t count) const;
};

template <typename T>
std::vector<T> cauchy_product(const std::vector<T>& f, const std::vector<T>& g) {
  const std::size_t count = std::min(f.size(), g.size());
  std::vector<T> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    T acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (f[k] == 0 || g[n - k] == 0) continue;
      acc += f[k] * g[n - k];
    }
    out[n] = std::move(acc);
  }
  return out;
}

template <typename T>
std::vector<T> binomial_product(const std::vector<T>& f, const std::vector<T>& g,
                                BinomialTable& binom) {
  const std::size_t count = std::min(f.size(), g.size());
  std::vector<T> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    const auto& row = binom.row(n);
    T acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (f[k] == 0 || g[n - k] == 0) continue;
      T term = f[k] * g[n - k];
      term *= row[k];
      acc += term;
    }
    out[n] = std::move(acc);
  }
  return out;
}

/// Folds cauchy_product over the factors left to right.
template <typename T>
std::vector<T> plain_product(std::span<const std::vector<T>> factors) {
  if (factors.empty()) return {};
  std::vector<T> acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = cauchy_product(acc, factors[i]);
  return acc;
}

/// Folds binomial_product over the factors left to right.
template <typename T>
std::vector<T> multinomial_product(std::span<const std::vector<T>> factors,
                                   BinomialTable& binom) {
  if (factors.empty()) return {};
  std::vector<T> acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = binomial_product(acc, factors[i], binom);
  return acc;
}

/// Indices 0..n of sum over compositions of n into r parts of the product
/// of weighted terms. Throws std::invalid_argument for an empty list.
std::vector<Integer> plain_conv_prefix(std::span<const WeightedSeq> seqs, std::size_t n);
Integer plain_conv(std::span<const WeightedSeq> seqs, std::size_t n);

/// As plain_conv_prefix, with the multinomial coefficient n!/(k_1!...k_r!).
std::vector<Integer> multinomial_conv_prefix(std::span<const WeightedSeq> seqs, std::size_t n,
                                             BinomialTable& binom);
Integer multinomial_conv(std::span<const WeightedSeq> seqs, std::size_t n);

/// sum_{k=0}^{n-3} T_k (T_{n-k} + T_{n-k-2} + 2 T_{n-k-3}). Throws
/// IndexTooSmall for n < 3.
Integer prop1_lhs(std::size_t n);
/// (n-2) T_{n-1} - T_{n-2}.
Integer prop1_rhs(std::size_t n);

/// Weight of l T_l in the two-fold ordinary convolution at index n:
///   sum_i 2^(i-1) (i^m + i^(3m)) C(m/2, i),  m = n - l - i - 1,
/// read as 0 for odd m and 2^i (-1)^(m/2) C(m/2, i) for even m.
Integer prop2_weight(std::size_t n, std::size_t l, BinomialTable& binom);
/// sum_{l=1}^{n-1} prop2_weight(n, l) l T_l. Throws IndexTooSmall for n < 2.
Integer prop2_rhs(std::size_t n);

}  // namespace tribo
