#include <benchmark/benchmark.h>

#include "gamelab/builtin.hpp"
#include "gamelab/dynamics.hpp"
#include "gamelab/equilibrium.hpp"
#include "gamelab/stackelberg.hpp"

using namespace gamelab;

namespace {

Game cournot() {
  GameSpec spec{GameKind::CournotLinear,
                {{"a", 10}, {"b", 1}, {"c1", 2}, {"c2", 2}}};
  return build_game(spec).game;
}

void BM_BestResponse(benchmark::State& state) {
  const Game game = cournot();
  BrSolverConfig cfg;
  cfg.grid_points = static_cast<int>(state.range(0));
  const StrategyProfile at = StrategyProfile::scalars({4, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_response(game, 1, at, cfg));
  }
}
BENCHMARK(BM_BestResponse)->Arg(51)->Arg(201)->Arg(801);

void BM_RunDynamicsSynchronous(benchmark::State& state) {
  const Game game = cournot();
  for (auto _ : state) {
    Rng rng(0);
    benchmark::DoNotOptimize(
        run_dynamics(game, StrategyProfile::scalars({0, 0}),
                     DecisionRule::best_response(), {ScheduleKind::Synchronous},
                     {}, {100, 1e-6}, rng));
  }
}
BENCHMARK(BM_RunDynamicsSynchronous);

void BM_SolveSpneNumeric(benchmark::State& state) {
  const TwoPlayerGame g{cournot()};
  BrSolverConfig cfg;
  cfg.grid_points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_spne_numeric(g, cfg));
  }
}
BENCHMARK(BM_SolveSpneNumeric)->Arg(51)->Arg(201);

void BM_GridNashCandidates(benchmark::State& state) {
  const Game game = cournot();
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_nash_candidates(game, 51, 0.05));
  }
}
BENCHMARK(BM_GridNashCandidates);

}  // namespace

BENCHMARK_MAIN();
