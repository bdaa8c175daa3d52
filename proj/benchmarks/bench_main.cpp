#include <benchmark/benchmark.h>

#include "qgalois/classify.hpp"
#include "qgalois/residues.hpp"
#include "qgalois/riccati.hpp"
#include "worked_examples.hpp"

using namespace qgalois;
using namespace qgalois::test;

namespace {

// Product of n linear factors on two q-orbits, with multiplicity.
RatFun orbit_heavy(const FieldPtr& K, int n) {
  RatFun x = X(K), f = C(K, 1);
  KConst q = K->q();
  for (int i = 0; i < n; ++i) f = f * (x - C(K, q.pow(i) * (i % 2 ? 2 : 3))).pow(1 + i % 2);
  return (x + C(K, 5)) / f;
}

void BM_residue_table(benchmark::State& state) {
  FieldPtr K = formal(0);
  RatFun f = orbit_heavy(K, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(residue_table(f));
}
BENCHMARK(BM_residue_table)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_is_summable(benchmark::State& state) {
  FieldPtr K = formal(0);
  RatFun h = orbit_heavy(K, static_cast<int>(state.range(0)));
  RatFun f = sigma(h) - h;
  for (auto _ : state) benchmark::DoNotOptimize(is_summable(f));
}
BENCHMARK(BM_is_summable)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_riccati_reducible(benchmark::State& state) {
  Equation ex = reducible_example();
  for (auto _ : state) benchmark::DoNotOptimize(riccati_solve(ex.a, ex.b, FieldTag::K1));
}
BENCHMARK(BM_riccati_reducible)->Unit(benchmark::kMillisecond);

void BM_pipeline(benchmark::State& state, Equation (*example)()) {
  Equation ex = example();
  for (auto _ : state) benchmark::DoNotOptimize(compute_galois_groups(ex.a, ex.b));
}
BENCHMARK_CAPTURE(BM_pipeline, reducible, reducible_example)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_pipeline, conjugate_pair, conjugate_pair_example)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_pipeline, klein, klein_example)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_pipeline, colored_jones, colored_jones_example)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
