#include "tribo/convolution.hpp"

#include <stdexcept>
#include <string>

#include "tribo/errors.hpp"

namespace tribo {

const std::vector<Integer>& BinomialTable::row(std::size_t n) {
  while (rows_.size() <= n) {
    const auto& prev = rows_.back();
    std::vector<Integer> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k + 1 < next.size(); ++k) next[k] = prev[k - 1] + prev[k];
    rows_.push_back(std::move(next));
  }
  return rows_[n];
}

const Integer& BinomialTable::operator()(std::size_t n, std::size_t k) {
  static const Integer zero = 0;
  if (k > n) return zero;
  return row(n)[k];
}

std::vector<Integer> WeightedSeq::prefix(std::size_t count) const {
  std::vector<Integer> out = seq ? make_seq(*seq).prefix(count) : std::vector<Integer>(count, 1);
  if (base == 1) return out;
  Integer weight = 1;
  for (auto& t : out) {
    t *= weight;
    weight *= base;
  }
  return out;
}

namespace {

std::vector<std::vector<Integer>> materialize(std::span<const WeightedSeq> seqs, std::size_t n) {
  if (seqs.empty()) throw std::invalid_argument("convolution needs at least one sequence");
  std::vector<std::vector<Integer>> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(s.prefix(n + 1));
  return out;
}

}  // namespace

std::vector<Integer> plain_conv_prefix(std::span<const WeightedSeq> seqs, std::size_t n) {
  const auto factors = materialize(seqs, n);
  return plain_product<Integer>(factors);
}

Integer plain_conv(std::span<const WeightedSeq> seqs, std::size_t n) {
  return plain_conv_prefix(seqs, n)[n];
}

std::vector<Integer> multinomial_conv_prefix(std::span<const WeightedSeq> seqs, std::size_t n,
                                             BinomialTable& binom) {
  const auto factors = materialize(seqs, n);
  return multinomial_product<Integer>(factors, binom);
}

Integer multinomial_conv(std::span<const WeightedSeq> seqs, std::size_t n) {
  BinomialTable binom;
  return multinomial_conv_prefix(seqs, n, binom)[n];
}

Integer prop1_lhs(std::size_t n) {
  if (n < 3) throw IndexTooSmall("prop1_lhs needs n >= 3, got " + std::to_string(n));
  auto t = tribonacci().prefix(n + 1);
  Integer sum = 0;
  for (std::size_t k = 0; k + 3 <= n; ++k) {
    sum += t[k] * (t[n - k] + t[n - k - 2] + 2 * t[n - k - 3]);
  }
  return sum;
}

Integer prop1_rhs(std::size_t n) {
  if (n < 3) throw IndexTooSmall("prop1_rhs needs n >= 3, got " + std::to_string(n));
  auto t = tribonacci().prefix(n);
  return Integer(static_cast<unsigned long>(n - 2)) * t[n - 1] - t[n - 2];
}

Integer prop2_weight(std::size_t n, std::size_t l, BinomialTable& binom) {
  Integer weight = 0;
  if (l + 1 > n) return weight;
  const std::size_t top = (n - l - 1) / 3;
  for (std::size_t i = 0; i <= top; ++i) {
    const std::size_t m = n - l - i - 1;
    if (m % 2 != 0) continue;
    const std::size_t half = m / 2;
    if (i > half) continue;
    Integer term = binom(half, i);
    term <<= static_cast<mp_bitcnt_t>(i);
    if (half % 2 != 0) term = -term;
    weight += term;
  }
  return weight;
}

Integer prop2_rhs(std::size_t n) {
  if (n < 2) throw IndexTooSmall("prop2_rhs needs n >= 2, got " + std::to_string(n));
  BinomialTable binom;
  auto t = tribonacci().prefix(n);
  Integer sum = 0;
  for (std::size_t l = 1; l + 1 <= n; ++l) {
    sum += prop2_weight(n, l, binom) * Integer(static_cast<unsigned long>(l)) * t[l];
  }
  return sum;
}

}  // namespace tribo
