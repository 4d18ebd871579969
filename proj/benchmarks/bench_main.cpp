#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "symdepth/betti.hpp"
#include "symdepth/exact_rank.hpp"
#include "symdepth/field.hpp"
#include "symdepth/generators.hpp"
#include "symdepth/graph.hpp"
#include "symdepth/ideal_constructions.hpp"
#include "symdepth/rng.hpp"

namespace {

symdepth::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return symdepth::Graph::from_edges(n, edges);
}

symdepth::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return symdepth::Graph::from_edges(n, edges);
}

void BM_StarPacking(benchmark::State& state) {
  symdepth::Rng rng(7);
  symdepth::Graph g = symdepth::erdos_renyi(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(symdepth::star_packing_number(g));
}
BENCHMARK(BM_StarPacking)->Arg(16)->Arg(24)->Arg(32);

void BM_SymbolicPowerCycle(benchmark::State& state) {
  symdepth::Graph g = cycle_graph(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(symdepth::symbolic_power(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SymbolicPowerCycle)->Arg(2)->Arg(3)->Arg(4);

void BM_DepthPath(benchmark::State& state) {
  auto ideal = symdepth::edge_ideal(path_graph(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(symdepth::depth(ideal, symdepth::FieldSpec::rationals()));
}
BENCHMARK(BM_DepthPath)->Arg(5)->Arg(7)->Arg(9);

void BM_DepthSymbolicSquare(benchmark::State& state) {
  auto ideal = symdepth::symbolic_power(cycle_graph(static_cast<int>(state.range(0))), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(symdepth::depth(ideal, symdepth::FieldSpec::rationals()));
}
BENCHMARK(BM_DepthSymbolicSquare)->Arg(4)->Arg(5)->Arg(6);

void BM_BettiViaTaylor(benchmark::State& state) {
  auto ideal = symdepth::edge_ideal(cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(symdepth::betti_via_taylor(ideal, symdepth::FieldSpec::rationals()));
}
BENCHMARK(BM_BettiViaTaylor)->Arg(5)->Arg(7);

void BM_ExactRank(benchmark::State& state) {
  symdepth::Rng rng(11);
  int n = static_cast<int>(state.range(0));
  symdepth::DenseMatrix m(n, std::vector<long long>(n));
  for (auto& row : m)
    for (auto& entry : row) entry = rng.uniform_int(-1, 1);
  symdepth::FieldSpec field =
      state.range(1) == 0 ? symdepth::FieldSpec::rationals() : symdepth::FieldSpec::gf(2);
  for (auto _ : state) benchmark::DoNotOptimize(symdepth::exact_rank(m, field));
}
BENCHMARK(BM_ExactRank)->Args({40, 0})->Args({40, 2})->Args({80, 0})->Args({80, 2});

}  // namespace

BENCHMARK_MAIN();
