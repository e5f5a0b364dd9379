#include <benchmark/benchmark.h>

#include <random>

#include "kindex/kindex.hpp"

namespace {

kindex::Corpus corpus_of(std::int64_t papers) {
  kindex::SynthConfig config;
  config.papers = static_cast<int>(papers);
  config.authors = static_cast<int>(std::max<std::int64_t>(10, papers / 20));
  config.years = 40;
  config.references_per_paper = 15;
  config.seed = 2024;
  return kindex::generate(config);
}

void BM_HirschFrontier(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(state.range(0)));
  for (auto& c : counts) c = std::uniform_int_distribution<std::int64_t>(0, 1000)(rng);
  for (auto _ : state) benchmark::DoNotOptimize(kindex::hirsch_frontier(counts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HirschFrontier)->RangeMultiplier(10)->Range(100, 1'000'000);

void BM_BuildNetworks(benchmark::State& state) {
  const auto corpus = corpus_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kindex::build_networks(corpus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildNetworks)->RangeMultiplier(10)->Range(1'000, 100'000)->Unit(benchmark::kMillisecond);

void BM_ComputeIndexes(benchmark::State& state) {
  const auto corpus = corpus_of(state.range(0));
  const auto nets = kindex::build_networks(corpus);
  std::size_t next = 0;
  for (auto _ : state) {
    const auto& author = corpus.authors()[next++ % corpus.author_count()];
    benchmark::DoNotOptimize(kindex::compute_indexes(nets, corpus, author));
  }
}
BENCHMARK(BM_ComputeIndexes)->RangeMultiplier(10)->Range(1'000, 100'000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
