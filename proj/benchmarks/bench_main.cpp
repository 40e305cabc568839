#include <benchmark/benchmark.h>

#include <birack/birack.hpp>
#include <birack/census.hpp>
#include <birack/constructors.hpp>
#include <birack/groups.hpp>
#include <birack/perm_group.hpp>
#include <birack/retracts.hpp>
#include <birack/theorems.hpp>

namespace {

using namespace birack;

void BM_MltClosureWada(benchmark::State& state) {
  auto const w = wada(cyclic(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlt(w).order());
  }
}
BENCHMARK(BM_MltClosureWada)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_LowerCentralSeries(benchmark::State& state) {
  auto const g = lmlt(example6());
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower_central_series(g).size());
  }
}
BENCHMARK(BM_LowerCentralSeries);

void BM_Validate(benchmark::State& state) {
  auto const w = wada(quaternion8());
  auto const circ = w.circ_table();
  auto const bullet = w.bullet_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(circ, bullet).size());
  }
}
BENCHMARK(BM_Validate);

void BM_FullCensus(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_biracks(n).size());
  }
}
BENCHMARK(BM_FullCensus)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_DistributiveCensus(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distributive_biracks(n).size());
  }
}
BENCHMARK(BM_DistributiveCensus)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Reductivity(benchmark::State& state) {
  auto const b = example6();
  auto const m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_m_reductive(b, m));
  }
}
BENCHMARK(BM_Reductivity)->DenseRange(1, 5);

void BM_MainTheoremExample(benchmark::State& state) {
  auto const b = example6();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_main_theorem(b).holds);
  }
}
BENCHMARK(BM_MainTheoremExample)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
