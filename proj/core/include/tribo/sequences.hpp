#pragma once

// Generalized Tribonacci sequences and the "scale + primitive triple"
// presentation of exponential generating functions of the form
//   q(alpha) e^(alpha x) + q(beta) e^(beta x) + q(gamma) e^(gamma x),
// whose k-th EGF coefficient is trace(x^k q).

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tribo/field.hpp"
#include "tribo/rational.hpp"

namespace tribo {

struct InitTriple {
  Integer s0;
  Integer s1;
  Integer s2;

  std::array<Integer, 3> values() const { return {s0, s1, s2}; }
  bool is_zero() const { return s0 == 0 && s1 == 0 && s2 == 0; }
  /// "(s0,s1,s2)"
  std::string to_string() const;

  friend bool operator==(const InitTriple& a, const InitTriple& b) {
    return a.s0 == b.s0 && a.s1 == b.s1 && a.s2 == b.s2;
  }
};

/// Parses "a,b,c" (optionally parenthesized). Throws std::invalid_argument.
InitTriple parse_triple(std::string_view text);

/// Terms of s_k = s_{k-1} + s_{k-2} + s_{k-3} from a given initial triple,
/// memoized append-only. Not safe for concurrent use; copies are cheap and
/// independent.
template <typename T>
class BasicTriboSeq {
 public:
  explicit BasicTriboSeq(std::array<T, 3> init) : memo_(init.begin(), init.end()) {}

  T term(std::size_t k) {
    extend(k + 1);
    return memo_[k];
  }

  /// Terms 0 .. count-1.
  std::vector<T> prefix(std::size_t count) {
    extend(count);
    return std::vector<T>(memo_.begin(), memo_.begin() + static_cast<std::ptrdiff_t>(count));
  }

  std::array<T, 3> initial() const { return {memo_[0], memo_[1], memo_[2]}; }
  std::size_t materialized() const noexcept { return memo_.size(); }

 private:
  void extend(std::size_t count) {
    if (memo_.size() >= count) return;
    memo_.reserve(count);
    while (memo_.size() < count) {
      const std::size_t n = memo_.size();
      T next = memo_[n - 1];
      next += memo_[n - 2];
      next += memo_[n - 3];
      memo_.push_back(std::move(next));
    }
  }

  std::vector<T> memo_;
};

using TriboSeq = BasicTriboSeq<Integer>;
using RationalTriboSeq = BasicTriboSeq<Rational>;

inline TriboSeq make_seq(const InitTriple& t) { return TriboSeq(t.values()); }
/// The ordinary Tribonacci numbers 0, 1, 1, 2, 4, 7, ...
inline TriboSeq tribonacci() { return TriboSeq({Integer(0), Integer(1), Integer(1)}); }

/// (1/scale) T^(triple): the canonical presentation of an EGF combination.
struct ScaledSeq {
  Rational scale;
  InitTriple triple;

  /// Every identity in the literature has an integer scale; a rational one
  /// can only come from an unusual input and is reported as such.
  bool integral_scale() const { return is_integer(scale); }
  /// T^(triple)_k / scale.
  Rational term(std::size_t k) const;
  std::vector<Rational> prefix(std::size_t count) const;

  friend bool operator==(const ScaledSeq& a, const ScaledSeq& b) {
    return a.scale == b.scale && a.triple == b.triple;
  }
};

/// (trace(q), trace(xq), trace(x^2 q)).
std::array<Rational, 3> initial_traces(const FieldElement& q);

/// trace(x^k q), by running the recurrence from initial_traces(q).
Rational egf_rational_term(const FieldElement& q, std::size_t k);
std::vector<Rational> egf_rational_prefix(const FieldElement& q, std::size_t count);

/// The unique element whose initial traces are `traces`; the trace form of
/// K is nondegenerate, so this always exists.
FieldElement element_from_traces(const std::array<Rational, 3>& traces);

/// The element whose EGF is (1/scale) sum T^(triple)_k x^k / k!.
FieldElement element_of(const ScaledSeq& s);

/// Primitive triple with scale * q(alpha) > 0 and trace(x^j q) = s_j / scale.
/// Throws ZeroAtRoot for q = 0.
ScaledSeq normalize_egf(const FieldElement& q);

/// First k <= k_max where T^(triple)_k != scale * trace(x^k q), if any.
std::optional<std::size_t> binet_mismatch(const ScaledSeq& scaled, const FieldElement& q,
                                          std::size_t k_max);

inline bool binet_check(const ScaledSeq& scaled, const FieldElement& q, std::size_t k_max) {
  return !binet_mismatch(scaled, q, k_max).has_value();
}

}  // namespace tribo
