#include <benchmark/benchmark.h>

#include "symgame/ef_solver.hpp"
#include "symgame/isomorphism.hpp"
#include "symgame/solver.hpp"

using namespace symgame;

static void BM_SolvePath(benchmark::State& state) {
  Graph g = make_path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SymSolver solver(g);
    benchmark::DoNotOptimize(solver.solve().value.rounds);
  }
}
BENCHMARK(BM_SolvePath)->Arg(5)->Arg(7)->Arg(9);

static void BM_SolveCycle(benchmark::State& state) {
  Graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SymSolver solver(g);
    benchmark::DoNotOptimize(solver.solve().value.rounds);
  }
}
BENCHMARK(BM_SolveCycle)->Arg(5)->Arg(7)->Arg(9);

static void BM_SolveComplete(benchmark::State& state) {
  Graph g = make_complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SymSolver solver(g);
    benchmark::DoNotOptimize(solver.solve().value.rounds);
  }
}
BENCHMARK(BM_SolveComplete)->Arg(4)->Arg(5);

static void BM_SolveEfPaths(benchmark::State& state) {
  Graph g0 = make_path(static_cast<int>(state.range(0)));
  Graph g1 = make_path(static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) {
    EFSolver solver(g0, g1);
    benchmark::DoNotOptimize(solver.solve().value.rounds);
  }
}
BENCHMARK(BM_SolveEfPaths)->Arg(3)->Arg(5);

static void BM_SubgraphIso(benchmark::State& state) {
  Graph g = make_complete(5);
  EdgeSet a(10, {0, 1, 2, 5});
  EdgeSet b(10, {3, 4, 6, 7});
  for (auto _ : state) benchmark::DoNotOptimize(subgraphs_isomorphic(g, a, b));
}
BENCHMARK(BM_SubgraphIso);
