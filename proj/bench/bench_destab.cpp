// Serial reference vs OpenMP destabiliser enumeration over cubic boxes.
// Set OMP_NUM_THREADS to vary the parallel width.

#include "elliptic_tilt/stability.hpp"

#include <benchmark/benchmark.h>

using namespace elliptic_tilt;

namespace {

const ChernMatrix kE{0, 2, 1, 1, 1, 0};
const GeometryParams kGeo{1, 1};

SearchBox box_for(const benchmark::State& state)
{
   const auto r = state.range(0);
   return SearchBox::uniform(-r, r);
}

void BM_DestabSerial(benchmark::State& state)
{
   const SearchBox box = box_for(state);
   for (auto _ : state) benchmark::DoNotOptimize(destabilizer_search_serial(kE, box, 1, kGeo));
   state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * box.volume()));
}

void BM_DestabParallel(benchmark::State& state)
{
   const SearchBox box = box_for(state);
   for (auto _ : state) benchmark::DoNotOptimize(destabilizer_search(kE, box, 1, kGeo));
   state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * box.volume()));
}

}  // namespace

BENCHMARK(BM_DestabSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DestabParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
