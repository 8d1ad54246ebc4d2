#include <benchmark/benchmark.h>

#include "tpv/families.hpp"
#include "tpv/gf.hpp"
#include "tpv/lemma_a.hpp"
#include "tpv/matgroup.hpp"

using namespace tpv;

static void BM_FieldMultiply(benchmark::State& state) {
  const auto& f = field_make(7, 2);
  std::uint32_t x = 3;
  for (auto _ : state) {
    x = f.mul(x, 10) + 1;
    if (x >= f.order()) x -= static_cast<std::uint32_t>(f.order());
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMultiply);

static void BM_ClosureGL2(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(families::gl(2, q).order());
}
BENCHMARK(BM_ClosureGL2)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SylowCensus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_row(n, 7).involutions);
}
BENCHMARK(BM_SylowCensus)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_LatticeS5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(SubgroupStream(families::symmetric(5)).total_subgroups());
}
BENCHMARK(BM_LatticeS5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
