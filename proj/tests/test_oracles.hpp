#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the convolution kernels or the field code it is checking.

#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "tribo/field.hpp"
#include "tribo/rational.hpp"

namespace oracle {

using tribo::Integer;
using tribo::Rational;

inline Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

// Calls visit(k) for every composition k_1 + ... + k_r = n with k_i >= 0.
inline void for_each_composition(std::size_t r, std::size_t n,
                                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> k(r, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == r) {
      k[i] = left;
      visit(k);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      k[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (r > 0) rec(0, n);
}

inline Integer plain_by_enumeration(const std::vector<std::vector<Integer>>& seqs, std::size_t n) {
  Integer total = 0;
  for_each_composition(seqs.size(), n, [&](const std::vector<std::size_t>& k) {
    Integer term = 1;
    for (std::size_t i = 0; i < k.size(); ++i) term *= seqs[i][k[i]];
    total += term;
  });
  return total;
}

inline Integer multinomial_by_enumeration(const std::vector<std::vector<Integer>>& seqs,
                                          std::size_t n) {
  Integer total = 0;
  const Integer top = factorial(n);
  for_each_composition(seqs.size(), n, [&](const std::vector<std::size_t>& k) {
    Integer term = top;
    for (std::size_t i = 0; i < k.size(); ++i) {
      term /= factorial(k[i]);
    }
    for (std::size_t i = 0; i < k.size(); ++i) term *= seqs[i][k[i]];
    total += term;
  });
  return total;
}

// b^k * T^(s)_k by the plain recurrence.
inline std::vector<Integer> weighted_terms(Integer s0, Integer s1, Integer s2, long base,
                                           std::size_t count) {
  std::vector<Integer> t{s0, s1, s2};
  while (t.size() < count) t.push_back(t[t.size() - 1] + t[t.size() - 2] + t[t.size() - 3]);
  t.resize(count);
  Integer w = 1;
  for (auto& v : t) {
    v *= w;
    w *= base;
  }
  return t;
}

// Norm as the determinant of the multiplication-by-q matrix, built here from
// q, x q and x^2 q with the reduction x^3 = 1 + x + x^2 written out by hand.
inline Rational norm_by_determinant(const tribo::FieldElement& q) {
  auto times_x = [](const std::array<Rational, 3>& a) {
    return std::array<Rational, 3>{a[2], a[0] + a[2], a[1] + a[2]};
  };
  const std::array<Rational, 3> c0 = q.coeffs();
  const std::array<Rational, 3> c1 = times_x(c0);
  const std::array<Rational, 3> c2 = times_x(c1);
  // columns c0, c1, c2
  Rational det = c0[0] * (c1[1] * c2[2] - c2[1] * c1[2]);
  det -= c1[0] * (c0[1] * c2[2] - c2[1] * c0[2]);
  det += c2[0] * (c0[1] * c1[2] - c1[1] * c0[2]);
  return det;
}

inline Rational small_rational(std::mt19937_64& rng, long num_range = 9, long den_max = 6) {
  const long num = static_cast<long>(rng() % static_cast<unsigned long>(2 * num_range + 1)) - num_range;
  const long den = static_cast<long>(rng() % static_cast<unsigned long>(den_max)) + 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline tribo::FieldElement random_element(std::mt19937_64& rng) {
  return tribo::FieldElement(small_rational(rng), small_rational(rng), small_rational(rng));
}

// Real root of x^3 - x^2 - x - 1 by plain bisection in long double.
inline long double real_root() {
  long double lo = 1.8L, hi = 1.9L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    const long double f = ((mid - 1) * mid - 1) * mid - 1;
    (f > 0 ? hi : lo) = mid;
  }
  return lo;
}

inline long double eval_at(const tribo::FieldElement& q, long double x) {
  return q[0].get_d() + q[1].get_d() * x + q[2].get_d() * x * x;
}

// All three roots: the complex pair solves x^2 + (a-1) x + 1/a = 0.
inline std::array<std::complex<long double>, 3> all_roots() {
  const long double a = real_root();
  const long double b = a - 1;
  const long double disc = b * b - 4 / a;
  const std::complex<long double> sq(0, std::sqrt(-disc));
  return {std::complex<long double>(a), (-b + sq) / 2.0L, (-b - sq) / 2.0L};
}

}  // namespace oracle
