#ifndef GAMELAB_DYNAMICS_HPP
#define GAMELAB_DYNAMICS_HPP

#include <optional>
#include <vector>

#include "gamelab/game.hpp"
#include "gamelab/rng.hpp"

namespace gamelab {

enum class RuleKind { BestResponse, BetterResponse };

struct DecisionRule {
  RuleKind kind = RuleKind::BestResponse;
  double improvement_eps = 1e-6;  // BetterResponse only
  int max_draws = 64;             // BetterResponse only

  static DecisionRule best_response() { return {}; }
  static DecisionRule better_response(double eps, int max_draws = 64) {
    return {RuleKind::BetterResponse, eps, max_draws};
  }
  bool operator==(const DecisionRule&) const = default;
};

enum class ScheduleKind { Synchronous, RoundRobin, Random, Asynchronous };

struct Schedule {
  ScheduleKind kind = ScheduleKind::Synchronous;
  double inclusion_prob = 0.5;  // Asynchronous only, in (0, 1]

  bool operator==(const Schedule&) const = default;
};

/// Configuration of the continuous argmax: a uniform grid over [lo, hi]
/// followed by refine_rounds of re-gridding a shrinking window around the
/// incumbent optimum.
struct BrSolverConfig {
  int grid_points = 201;
  int refine_rounds = 3;
  double refine_shrink = 0.1;

  bool operator==(const BrSolverConfig&) const = default;
};

struct StopRule {
  int max_iters = 10000;
  double fix_tol = 1e-6;

  bool operator==(const StopRule&) const = default;
};

enum class StopReason { FixedPoint, MaxIterations, Cycle };

struct TrajectoryStep {
  int iteration;             // 0 is the initial profile
  std::vector<int> movers;   // empty for step 0
  StrategyProfile profile;   // profile after the step
  std::vector<double> utilities;
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
  bool converged = false;
  StopReason stop_reason = StopReason::MaxIterations;

  const StrategyProfile& final_profile() const { return steps.back().profile; }
};

/// Player i's best action against the other components of `profile`.
/// Finite spaces: exact argmax, ties broken by lowest list index.
/// Interval spaces: grid + shrinking refinement, ties by lowest coordinate.
ActionValue best_response(const Game& game, int i,
                          const StrategyProfile& profile,
                          const BrSolverConfig& cfg);

/// First of up to max_draws uniform random candidates improving player i's
/// utility by more than eps; nullopt when no draw qualifies.
std::optional<ActionValue> better_response(const Game& game, int i,
                                           const StrategyProfile& profile,
                                           double eps, Rng& rng,
                                           int max_draws);

/// The set of players who move at iteration t, ascending by index.
std::vector<int> select_movers(const Schedule& schedule, int n_players, int t,
                               Rng& rng);

/// One simultaneous update: every mover computes its new action against the
/// same incoming profile, then all updates are applied at once.
StrategyProfile step(const Game& game, const StrategyProfile& profile,
                     const DecisionRule& rule, const std::vector<int>& movers,
                     const BrSolverConfig& cfg, Rng& rng);

/// Iterates step() under the schedule until a fixed point, a cycle, or the
/// iteration cap. Deterministic in (game, init, rule, schedule, cfg, seed).
Trajectory run_dynamics(const Game& game, const StrategyProfile& init,
                        const DecisionRule& rule, const Schedule& schedule,
                        const BrSolverConfig& cfg, const StopRule& stop,
                        Rng& rng);

}  // namespace gamelab

#endif  // GAMELAB_DYNAMICS_HPP
