// Serial reference vs OpenMP for the GSp4 central grid and the full sweep.

#include <benchmark/benchmark.h>

#include "stabletrace/kottwitz.hpp"

using namespace stabletrace;

namespace {

void BM_GridSerial(benchmark::State& state) {
  const auto pairs = odd_pairs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gsp4_central_grid_serial(GroupCatalog::builtin(), pairs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pairs.size()));
}

void BM_GridParallel(benchmark::State& state) {
  const auto pairs = odd_pairs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gsp4_central_grid(GroupCatalog::builtin(), pairs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pairs.size()));
}

void BM_VerifySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1_serial(GroupCatalog::builtin(), state.range(0)));
}

void BM_VerifyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1(GroupCatalog::builtin(), state.range(0)));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(49)->Arg(99)->Arg(199)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridParallel)->Arg(49)->Arg(99)->Arg(199)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifySerial)->Arg(99)->Arg(199)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyParallel)->Arg(99)->Arg(199)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
