#include <doctest.h>

#include <cmath>
#include <random>

#include "test_oracles.hpp"
#include "tribo/errors.hpp"
#include "tribo/field.hpp"
#include "tribo/sequences.hpp"

using namespace tribo;

namespace {

const FieldElement x = FieldElement::generator();

}  // namespace

TEST_CASE("reduction of x^3 and x^4") {
  CHECK(x.pow(3) == FieldElement(1, 1, 1));
  CHECK(x.pow(4) == FieldElement(1, 2, 2));
  CHECK(x * x * x == x.pow(3));
  CHECK(x.pow(0) == FieldElement::constant(1));
}

TEST_CASE("ring laws on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_element(rng);
    const auto b = oracle::random_element(rng);
    const auto c = oracle::random_element(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == FieldElement());
    CHECK(-a + a == FieldElement());
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_element(rng);
    if (a.is_zero()) continue;
    CHECK(a * inverse(a) == FieldElement::constant(1));
  }
  CHECK_THROWS_AS(inverse(FieldElement()), ZeroElement);
  CHECK(inverse(x) == FieldElement(-1, -1, 1));
}

TEST_CASE("trace is linear and traces of x^k follow the recurrence") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_element(rng);
    const auto b = oracle::random_element(rng);
    const Rational k = oracle::small_rational(rng);
    CHECK(trace(a + b) == trace(a) + trace(b));
    CHECK(trace(k * a) == k * trace(a));
  }
  auto p = make_seq({3, 1, 3});
  for (unsigned k = 0; k <= 40; ++k) CHECK(trace(x.pow(k)) == Rational(p.term(k)));
}

TEST_CASE("norm: resultant agrees with the multiplication-matrix determinant") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_element(rng);
    const auto b = oracle::random_element(rng);
    CHECK(norm(a) == oracle::norm_by_determinant(a));
    CHECK(norm(a * b) == norm(a) * norm(b));
  }
  CHECK(norm(x) == 1);
  CHECK(norm(FieldElement::constant(3)) == 27);
  CHECK(norm(FieldElement()) == 0);
}

TEST_CASE("multiplication matrix columns are q x^j") {
  std::mt19937_64 rng(19);
  const auto a = oracle::random_element(rng);
  const auto m = multiplication_matrix(a);
  for (unsigned j = 0; j < 3; ++j) {
    const auto col = a * x.pow(j);
    for (unsigned i = 0; i < 3; ++i) CHECK(m[i][j] == col[i]);
  }
}

TEST_CASE("the element c and its symmetric functions") {
  const FieldElement c = c_element();
  CHECK(c * binet_denominator() == FieldElement::constant(1));
  CHECK(trace(c) == 0);
  CHECK(trace(x * c) == 1);
  CHECK(trace(x * x * c) == 1);
  CHECK(norm(c) == make_rational(1, 44));
  CHECK(trace(cofactor_element()) == make_rational(-1, 22));
  // trace(x^k c) = T_k
  auto t = tribonacci();
  for (unsigned k = 0; k <= 30; ++k) CHECK(trace(x.pow(k) * c) == Rational(t.term(k)));
}

TEST_CASE("root interval brackets the real root") {
  const RootInterval r0 = initial_root_interval();
  CHECK(minimal_polynomial_at(r0.lower) < 0);
  CHECK(minimal_polynomial_at(r0.upper) > 0);
  const RootInterval r = refine(r0, 40);
  CHECK(minimal_polynomial_at(r.lower) <= 0);
  CHECK(minimal_polynomial_at(r.upper) >= 0);
  CHECK(r.width() == r0.width() / pow(Rational(2), 40));
  const long double alpha = oracle::real_root();
  CHECK(r.lower.get_d() <= static_cast<double>(alpha) + 1e-12);
  CHECK(r.upper.get_d() >= static_cast<double>(alpha) - 1e-12);
}

TEST_CASE("sign at the real root agrees with floating evaluation") {
  std::mt19937_64 rng(23);
  const long double alpha = oracle::real_root();
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_element(rng);
    if (a.is_zero()) continue;
    const long double v = oracle::eval_at(a, alpha);
    if (std::fabs(v) < 1e-9L) continue;
    RootInterval cert;
    const int s = sign_at_real_root(a, cert);
    CHECK(s == (v > 0 ? 1 : -1));
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("sign near cancellation and exact zero") {
  // 1 + x + x^2 - x^3 vanishes exactly at every root.
  const FieldElement z = FieldElement::constant(1) + x + x * x - x.pow(3);
  CHECK(z.is_zero());
  CHECK_THROWS_AS(sign_at_real_root(FieldElement()), ZeroAtRoot);
  // x - 1.8392867552141612 is tiny but nonzero at the root.
  const FieldElement tiny = x - FieldElement::constant(make_rational(Integer("18392867552141612"), Integer("10000000000000000")));
  const long double alpha = oracle::real_root();
  CHECK(sign_at_real_root(tiny) == (alpha - 1.8392867552141612L > 0 ? 1 : -1));
  CHECK(sign_at_real_root(c_element()) == 1);
  CHECK(sign_at_real_root(-x) == -1);
}

TEST_CASE("float embeddings match the oracle roots") {
  const auto r = float_roots();
  const auto o = oracle::all_roots();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(r[i] - std::complex<double>(o[i])) < 1e-12);
  }
  const auto e = float_embeddings(c_element());
  CHECK(std::abs(e[0] + e[1] + e[2]) < 1e-12);
  CHECK(std::abs(e[0] * e[1] * e[2] - 1.0 / 44) < 1e-12);
}
