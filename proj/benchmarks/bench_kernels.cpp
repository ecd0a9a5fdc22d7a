#include <benchmark/benchmark.h>

#include "genpos/families.hpp"
#include "genpos/metric.hpp"
#include "genpos/removal.hpp"
#include "genpos/solve.hpp"

using namespace genpos;

namespace {

Graph dense_random(int n, std::uint64_t seed) {
  return random_connected_graph(n, 0.5, seed);
}

void BM_DistanceMatrix(benchmark::State& state) {
  Graph g = dense_random(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(g));
}
BENCHMARK(BM_DistanceMatrix)->Arg(16)->Arg(32)->Arg(64);

void BM_MaxClique(benchmark::State& state) {
  Graph g = dense_random(static_cast<int>(state.range(0)), 23);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).first);
}
BENCHMARK(BM_MaxClique)->Arg(32)->Arg(48)->Arg(64);

void BM_SolveGeneral(benchmark::State& state) {
  Graph g = dense_random(static_cast<int>(state.range(0)), 37);
  for (auto _ : state)
    benchmark::DoNotOptimize(max_position_set(g, PositionKind::General).size);
}
BENCHMARK(BM_SolveGeneral)->Arg(12)->Arg(16)->Arg(20);

void BM_SolveDualMushroom(benchmark::State& state) {
  Graph g = make_family("Mk", {static_cast<int>(state.range(0))}).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(max_position_set(g, PositionKind::Dual).size);
}
BENCHMARK(BM_SolveDualMushroom)->Arg(4)->Arg(6)->Arg(8);

void BM_SolveOuterGn(benchmark::State& state) {
  Graph g = make_family("Gn", {static_cast<int>(state.range(0))}).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(max_position_set(g, PositionKind::Outer).size);
}
BENCHMARK(BM_SolveOuterGn)->Arg(3)->Arg(5)->Arg(8);

void BM_VertexReport(benchmark::State& state) {
  FamilyInstance f = make_family("Mk", {5});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        vertex_removal_report(f.graph, *f.distinguished_vertex));
}
BENCHMARK(BM_VertexReport);

void BM_SweepN4(benchmark::State& state) {
  std::vector<Graph> corpus = connected_graphs(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(run_sweep(corpus, 1).reports.size());
}
BENCHMARK(BM_SweepN4);

}  // namespace

BENCHMARK_MAIN();
