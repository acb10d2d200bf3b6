#include <benchmark/benchmark.h>

#include <vector>

#include "tribo/catalog.hpp"
#include "tribo/convolution.hpp"
#include "tribo/derivation.hpp"
#include "tribo/field.hpp"
#include "tribo/sequences.hpp"

using namespace tribo;

static void BM_FieldPow(benchmark::State& state) {
  const FieldElement c = c_element();
  for (auto _ : state) benchmark::DoNotOptimize(c.pow(static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_FieldPow)->Arg(10)->Arg(100)->Arg(1000);

static void BM_Normalize(benchmark::State& state) {
  const FieldElement q = family_element({FamilyKind::CofactorPower, static_cast<unsigned>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(normalize_egf(q));
}
BENCHMARK(BM_Normalize)->Arg(1)->Arg(6)->Arg(40);

static void BM_SignAtRoot(benchmark::State& state) {
  // x minus a 17-digit approximation of the root: needs many refinements.
  const FieldElement x = FieldElement::generator();
  const FieldElement q = x - FieldElement::constant(make_rational(Integer("18392867552141611"), Integer("10000000000000000")));
  for (auto _ : state) benchmark::DoNotOptimize(sign_at_real_root(q));
}
BENCHMARK(BM_SignAtRoot);

static void BM_MultinomialConv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<WeightedSeq> seqs{WeightedSeq::of({0, 1, 1}), WeightedSeq::of({2, 3, 10}, 2),
                                      WeightedSeq::of({-1, 2, 7}, -1), WeightedSeq::unit()};
  for (auto _ : state) {
    BinomialTable binom;
    benchmark::DoNotOptimize(multinomial_conv_prefix(seqs, n, binom));
  }
}
BENCHMARK(BM_MultinomialConv)->Arg(50)->Arg(120)->Arg(250);

static void BM_Verify(benchmark::State& state, const char* id) {
  const Catalog cat = Catalog::standard();
  for (auto _ : state) benchmark::DoNotOptimize(cat.verify(id, {}));
}
BENCHMARK_CAPTURE(BM_Verify, P3, "P3");
BENCHMARK_CAPTURE(BM_Verify, T4, "T4");
BENCHMARK_CAPTURE(BM_Verify, GT5, "GT5");

static void BM_VerifyAll(benchmark::State& state) {
  const Catalog cat = Catalog::standard();
  for (auto _ : state) benchmark::DoNotOptimize(cat.verify_all({}));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
