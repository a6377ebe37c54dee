#include <benchmark/benchmark.h>

#include "orddiv/orddiv.hpp"

namespace {

using namespace orddiv;
using base::RationalBase;

void BM_CensusSegment(benchmark::State& state) {
  census::CensusConfig config{RationalBase(2), 12, 20'000'000};
  config.segment_size = static_cast<arith::u64>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census::census_segment(config, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CensusSegment)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_Density(benchmark::State& state) {
  const RationalBase g(-9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(density::density(g, static_cast<arith::u64>(state.range(0))));
  }
}
BENCHMARK(BM_Density)->Arg(6)->Arg(720720);

void BM_SeriesPartial(benchmark::State& state) {
  const RationalBase g(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kummer::series_partial(g, 12, static_cast<arith::u64>(state.range(0))));
  }
}
BENCHMARK(BM_SeriesPartial)->Arg(1 << 10)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);

void BM_Factorize(benchmark::State& state) {
  arith::u64 n = 4294967291ULL * 4294967279ULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arith::factorize(n));
  }
}
BENCHMARK(BM_Factorize)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
