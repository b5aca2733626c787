#include <benchmark/benchmark.h>

#include <optional>

#include "wicket/extremal.hpp"
#include "wicket/generators.hpp"
#include "wicket/pipeline.hpp"

using namespace wicket;

static void BM_Packing(benchmark::State& state) {
  VertexId n = static_cast<VertexId>(state.range(0));
  long long nodes = 0;
  for (auto _ : state) {
    ExtremalRecord rec = max_edges_search(n, std::nullopt);
    benchmark::DoNotOptimize(rec.max_edges);
    nodes = rec.nodes;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_Packing)->Arg(8)->Arg(9)->Arg(10);

static void BM_WicketFreeSearch(benchmark::State& state) {
  VertexId n = static_cast<VertexId>(state.range(0));
  long long nodes = 0;
  for (auto _ : state) {
    ExtremalRecord rec = max_edges_search(n, Pattern::wicket);
    benchmark::DoNotOptimize(rec.max_edges);
    nodes = rec.nodes;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_WicketFreeSearch)->Arg(9)->Arg(10);

static void BM_PackingThreads(benchmark::State& state) {
  ExtremalOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ExtremalRecord rec = max_edges_search(10, std::nullopt, opt);
    benchmark::DoNotOptimize(rec.max_edges);
  }
}
BENCHMARK(BM_PackingThreads)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

static void BM_SimulationRounds(benchmark::State& state) {
  LinearTripleSystem sys = steiner_triple_system(27);
  int proof = static_cast<int>(state.range(0));
  SimulateOptions opt;
  opt.seed = 5;
  opt.rounds = 100;
  for (auto _ : state) {
    SimulationResult r = proof == 1 ? simulate_proof1(sys, opt) : simulate_proof2(sys, opt);
    benchmark::DoNotOptimize(r.rounds_run);
    state.SetItemsProcessed(state.items_processed() + r.rounds_run);
  }
}
BENCHMARK(BM_SimulationRounds)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
