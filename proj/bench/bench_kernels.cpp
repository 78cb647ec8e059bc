// Serial naive vs serial Horspool vs OpenMP Horspool on one generated
// instance per pattern length (k=3, n=100000, sigma=10).

#include <benchmark/benchmark.h>

#include "mvmatch/matchers.hpp"
#include "mvmatch/synth.hpp"

namespace {

using namespace mvmatch;

const Instance& instance_for(std::size_t m) {
  static std::vector<std::unique_ptr<Instance>> cache(64);
  auto& slot = cache.at(m);
  if (!slot) slot = std::make_unique<Instance>(generate_instance(GenConfig{3, 100000, 10, m, 1, PatternMode::uniform}));
  return *slot;
}

void BM_Naive(benchmark::State& state) {
  const auto& inst = instance_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_naive(inst.text, inst.pattern));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.text.length()));
}

void BM_Horspool(benchmark::State& state) {
  const auto& inst = instance_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_horspool(inst.text, inst.pattern));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.text.length()));
}

void BM_HorspoolParallel(benchmark::State& state) {
  const auto& inst = instance_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_horspool_parallel(inst.text, inst.pattern));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.text.length()));
}

void lengths(benchmark::internal::Benchmark* b) {
  for (const int m : {2, 4, 8, 16, 24, 30}) b->Arg(m);
}

}  // namespace

BENCHMARK(BM_Naive)->Apply(lengths);
BENCHMARK(BM_Horspool)->Apply(lengths);
BENCHMARK(BM_HorspoolParallel)->Apply(lengths);

BENCHMARK_MAIN();
