#include <benchmark/benchmark.h>

#include "wicket/generators.hpp"
#include "wicket/patterns.hpp"

using namespace wicket;

static void BM_CountWickets_AG23(benchmark::State& state) {
  LinearTripleSystem sys = affine_plane_order3();
  for (auto _ : state) benchmark::DoNotOptimize(count_wickets(sys));
}
BENCHMARK(BM_CountWickets_AG23);

static void BM_Count63_STS(benchmark::State& state) {
  LinearTripleSystem sys = steiner_triple_system(static_cast<VertexId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_63(sys));
}
BENCHMARK(BM_Count63_STS)->Arg(7)->Arg(15)->Arg(27);

static void BM_FindWicket_STS(benchmark::State& state) {
  LinearTripleSystem sys = steiner_triple_system(static_cast<VertexId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_wicket(sys));
}
BENCHMARK(BM_FindWicket_STS)->Arg(9)->Arg(15)->Arg(27);

static void BM_FindWicket_Absent(benchmark::State& state) {
  // Certified wicket-free input: the detector must exhaust its search.
  GenResult gen = greedy_pattern_free(static_cast<VertexId>(state.range(0)),
                                      Pattern::wicket, 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_wicket(gen.system));
}
BENCHMARK(BM_FindWicket_Absent)->Arg(20)->Arg(30);

static void BM_FindBergeC4_STS15(benchmark::State& state) {
  LinearTripleSystem sys = steiner_triple_system(15);
  for (auto _ : state) benchmark::DoNotOptimize(find_berge_c4(sys));
}
BENCHMARK(BM_FindBergeC4_STS15);

BENCHMARK_MAIN();
