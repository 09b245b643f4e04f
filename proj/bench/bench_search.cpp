#include <benchmark/benchmark.h>

#include "g2solv/fixtures.hpp"
#include "g2solv/search.hpp"

using namespace g2solv;

namespace {

const BilinearSystem& system_for(int example) {
  static std::array<std::optional<BilinearSystem>, 7> cache;
  auto& slot = cache[static_cast<std::size_t>(example)];
  if (!slot) slot = BilinearSystem::from_connection(printed_connection(example));
  return *slot;
}

void BM_SearchStart(benchmark::State& state) {
  const BilinearSystem& sys = system_for(static_cast<int>(state.range(0)));
  const SearchConfig cfg;
  int start = 0;
  for (auto _ : state) benchmark::DoNotOptimize(search_start(sys, cfg, start++));
}
BENCHMARK(BM_SearchStart)->Arg(1)->Arg(2);

void BM_SearchSerial(benchmark::State& state) {
  SearchConfig cfg;
  cfg.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numeric_search_serial(system_for(1), cfg));
  state.SetItemsProcessed(state.iterations() * cfg.starts);
}
BENCHMARK(BM_SearchSerial)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  SearchConfig cfg;
  cfg.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numeric_search(system_for(1), cfg));
  state.SetItemsProcessed(state.iterations() * cfg.starts);
}
BENCHMARK(BM_SearchParallel)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BuildSystem(benchmark::State& state) {
  const FrameConnection c = printed_connection(2);
  for (auto _ : state) benchmark::DoNotOptimize(BilinearSystem::from_connection(c));
}
BENCHMARK(BM_BuildSystem)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
