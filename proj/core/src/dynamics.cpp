#include "gamelab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace gamelab {

namespace {

// Argmax over a uniform grid on [lo, hi]; replaces the incumbent only on a
// strict improvement so ties resolve to the lowest coordinate. Ranking is
// invariant under positive affine rescaling of the utility.
void scan_grid(const Game& game, int i, const StrategyProfile& profile,
               double lo, double hi, int points, double& best_x,
               double& best_u) {
  const double width = hi - lo;
  for (int k = 0; k < points; ++k) {
    const double x =
        points == 1 ? lo : lo + width * static_cast<double>(k) / (points - 1);
    const StrategyProfile cand =
        with_action(game, profile, i, scalar_action(x));
    const double u = evaluate_utility(game, i, cand);
    if (u > best_u) {
      best_u = u;
      best_x = x;
    }
  }
}

}  // namespace

ActionValue best_response(const Game& game, int i,
                          const StrategyProfile& profile,
                          const BrSolverConfig& cfg) {
  const ActionSpace& space = game.spaces[i];
  if (space.is_finite()) {
    const auto& actions = space.finite_set().actions;
    std::size_t best_k = 0;
    double best_u = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < actions.size(); ++k) {
      const StrategyProfile cand = with_action(game, profile, i, actions[k]);
      const double u = evaluate_utility(game, i, cand);
      if (u > best_u) {
        best_u = u;
        best_k = k;
      }
    }
    return actions[best_k];
  }

  const auto& iv = space.bounds();
  double best_x = iv.lo;
  double best_u = -std::numeric_limits<double>::infinity();
  scan_grid(game, i, profile, iv.lo, iv.hi, cfg.grid_points, best_x, best_u);
  double width = iv.hi - iv.lo;
  for (int r = 0; r < cfg.refine_rounds; ++r) {
    width *= cfg.refine_shrink;
    const double wlo = std::max(iv.lo, best_x - width / 2.0);
    const double whi = std::min(iv.hi, best_x + width / 2.0);
    scan_grid(game, i, profile, wlo, whi, cfg.grid_points, best_x, best_u);
  }
  return scalar_action(best_x);
}

std::optional<ActionValue> better_response(const Game& game, int i,
                                           const StrategyProfile& profile,
                                           double eps, Rng& rng,
                                           int max_draws) {
  const double current = evaluate_utility(game, i, profile);
  const ActionSpace& space = game.spaces[i];
  for (int d = 0; d < max_draws; ++d) {
    ActionValue candidate;
    if (space.is_finite()) {
      const auto& actions = space.finite_set().actions;
      candidate = actions[rng.next_index(actions.size())];
    } else {
      const auto& iv = space.bounds();
      candidate = scalar_action(rng.next_in(iv.lo, iv.hi));
    }
    const StrategyProfile cand = with_action(game, profile, i, candidate);
    if (evaluate_utility(game, i, cand) > current + eps) return candidate;
  }
  return std::nullopt;
}

std::vector<int> select_movers(const Schedule& schedule, int n_players, int t,
                               Rng& rng) {
  switch (schedule.kind) {
    case ScheduleKind::Synchronous: {
      std::vector<int> all(n_players);
      for (int i = 0; i < n_players; ++i) all[i] = i;
      return all;
    }
    case ScheduleKind::RoundRobin:
      return {t % n_players};
    case ScheduleKind::Random:
      return {static_cast<int>(rng.next_index(n_players))};
    case ScheduleKind::Asynchronous: {
      std::vector<int> movers;
      do {
        movers.clear();
        for (int i = 0; i < n_players; ++i) {
          if (rng.next_bool(schedule.inclusion_prob)) movers.push_back(i);
        }
      } while (movers.empty());  // empty sets would stall; redraw
      return movers;
    }
  }
  return {};
}

StrategyProfile step(const Game& game, const StrategyProfile& profile,
                     const DecisionRule& rule, const std::vector<int>& movers,
                     const BrSolverConfig& cfg, Rng& rng) {
  // All movers respond to the same incoming profile; updates land at once.
  std::vector<std::pair<int, ActionValue>> updates;
  updates.reserve(movers.size());
  for (int i : movers) {
    if (rule.kind == RuleKind::BestResponse) {
      updates.emplace_back(i, best_response(game, i, profile, cfg));
    } else {
      auto found = better_response(game, i, profile, rule.improvement_eps, rng,
                                   rule.max_draws);
      if (found) updates.emplace_back(i, std::move(*found));
    }
  }
  StrategyProfile next = profile;
  for (auto& [i, action] : updates) {
    next = with_action(game, next, i, std::move(action));
  }
  return next;
}

Trajectory run_dynamics(const Game& game, const StrategyProfile& init,
                        const DecisionRule& rule, const Schedule& schedule,
                        const BrSolverConfig& cfg, const StopRule& stop,
                        Rng& rng) {
  require_valid_profile(game, init);

  Trajectory traj;
  traj.steps.push_back({0, {}, init, evaluate_utilities(game, init)});

  const bool per_player_pass = schedule.kind == ScheduleKind::RoundRobin ||
                               schedule.kind == ScheduleKind::Random;
  const int pass_len = per_player_pass ? game.n_players : 1;
  constexpr std::size_t kHistoryWindow = 100;

  std::deque<StrategyProfile> history;
  history.push_back(init);

  StrategyProfile profile = init;
  int quiet_steps = 0;
  // Players who have been offered a move during the current quiet stretch.
  // A fixed point is only declared once every player has had a turn without
  // changing its action; otherwise Random/Asynchronous schedules could stop
  // on a profile where an unselected player still has a profitable move.
  std::vector<char> quiet_cover(static_cast<std::size_t>(game.n_players), 0);
  traj.stop_reason = StopReason::MaxIterations;

  for (int t = 1; t <= stop.max_iters; ++t) {
    std::vector<int> movers =
        select_movers(schedule, game.n_players, t - 1, rng);
    StrategyProfile next = step(game, profile, rule, movers, cfg, rng);
    const double delta = profile_distance(profile, next);
    for (int m : movers) quiet_cover[static_cast<std::size_t>(m)] = 1;
    traj.steps.push_back(
        {t, std::move(movers), next, evaluate_utilities(game, next)});

    if (delta <= stop.fix_tol) {
      const bool covered =
          std::all_of(quiet_cover.begin(), quiet_cover.end(),
                      [](char c) { return c != 0; });
      if (++quiet_steps >= pass_len && covered) {
        traj.stop_reason = StopReason::FixedPoint;
        traj.converged = true;
        break;
      }
    } else {
      quiet_steps = 0;
      std::fill(quiet_cover.begin(), quiet_cover.end(), 0);
      bool seen = false;
      for (const auto& past : history) {
        if (profiles_equal(past, next)) {
          seen = true;
          break;
        }
      }
      if (seen) {
        traj.stop_reason = StopReason::Cycle;
        break;
      }
    }

    history.push_back(next);
    if (history.size() > kHistoryWindow) history.pop_front();
    profile = std::move(next);
  }
  return traj;
}

}  // namespace gamelab
