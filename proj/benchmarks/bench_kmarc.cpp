#include <benchmark/benchmark.h>

#include <random>

#include "kmarc/arcs.hpp"
#include "kmarc/autos.hpp"
#include "kmarc/constructions.hpp"

using namespace kmarc;

static void BM_Mul(benchmark::State& state) {
  const FieldTower t(static_cast<int>(state.range(0)), 1);
  std::mt19937_64 rng(1);
  std::vector<FieldElement> xs(1024);
  for (auto& x : xs) x = FieldElement(static_cast<std::uint32_t>(rng() % t.size()));
  FieldElement acc(1);
  for (auto _ : state) {
    for (FieldElement x : xs) acc = t.mul(acc, x) + FieldElement(1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_Mul)->Arg(4)->Arg(8);

static void BM_Inverse(benchmark::State& state) {
  const FieldTower t(8, 1);
  FieldElement x(0x1234);
  for (auto _ : state) {
    x = t.inv(x) + FieldElement(1);
    if (x.is_zero()) x = FieldElement(3);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Inverse);

// Direct census of H_r: every line of PG(2,q).
static void BM_DirectCensus(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int h = static_cast<int>(state.range(1));
  const int jobs = static_cast<int>(state.range(2));
  const FieldTower t(m, h);
  const PointSet arc = build_hr(t);
  const int type = static_cast<int>(t.q() / t.r());
  for (auto _ : state) benchmark::DoNotOptimize(verify_direct(t, arc, type, Level::full, jobs));
}
BENCHMARK(BM_DirectCensus)->Args({4, 2, 1})->Args({6, 2, 1})->Args({6, 2, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_Bracket(benchmark::State& state) {
  const FieldTower t(static_cast<int>(state.range(0)), 2);
  const PointSet arc = build_hr(t);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bracket(t, arc));
}
BENCHMARK(BM_Bracket)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_PowerSumsE(benchmark::State& state) {
  const FieldTower t(static_cast<int>(state.range(0)), 2);
  const PointSet arc = build_hr(t);
  for (auto _ : state) benchmark::DoNotOptimize(verify_power_sums(t, arc, ExponentKind::E));
}
BENCHMARK(BM_PowerSumsE)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_TranslationTest(benchmark::State& state) {
  const FieldTower t(6, 3);
  const PointSet arc = build_hr(t);
  const Line l0 = Line::affine(FieldElement(1), FieldElement(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_translation_arc(t, arc, 8, l0));
}
BENCHMARK(BM_TranslationTest)->Unit(benchmark::kMillisecond);

static void BM_QuotientClosure(benchmark::State& state) {
  const ExampleFixture fx = example_fixture(ExampleName::h8, 6);
  for (auto _ : state) benchmark::DoNotOptimize(example_quotient_order(fx, ExampleName::h8));
}
BENCHMARK(BM_QuotientClosure)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
