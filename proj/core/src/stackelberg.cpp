#include "gamelab/stackelberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gamelab {

namespace {

StrategyProfile seed_profile(const Game& game) {
  std::vector<ActionValue> actions(2);
  for (int i = 0; i < 2; ++i) {
    const auto& space = game.spaces[i];
    actions[i] = space.is_finite() ? space.finite_set().actions.front()
                                   : scalar_action(space.bounds().lo);
  }
  return StrategyProfile(std::move(actions));
}

}  // namespace

double follower_br_analytic(const LinearDuopolyParams& p, double q1) {
  return std::max(0.0, (p.a - p.b * q1 - p.c2) / (2.0 * p.b));
}

SpneSolution solve_spne_analytic(const LinearDuopolyParams& p) {
  SpneSolution sol;
  sol.method = SpneMethod::Analytic;
  const double q1 = (p.a + p.c2 - 2.0 * p.c1) / (2.0 * p.b);
  const double q2 = (p.a - 3.0 * p.c2 + 2.0 * p.c1) / (4.0 * p.b);
  sol.interior = p.interior() && q1 > 0.0 && q2 > 0.0;
  // Non-interior cases report quantities clamped at zero, follower re-derived
  // from the clamped leader action.
  sol.q1_star = std::max(0.0, q1);
  sol.q2_star = sol.interior ? q2 : follower_br_analytic(p, sol.q1_star);
  sol.leader_utility = p.leader_profit(sol.q1_star, sol.q2_star);
  sol.follower_utility = p.follower_profit(sol.q1_star, sol.q2_star);
  return sol;
}

ActionValue follower_br_numeric(const TwoPlayerGame& g, const ActionValue& q1,
                                const BrSolverConfig& cfg) {
  if (!g.game.spaces[0].contains(q1)) {
    throw ActionOutOfSpace("leader action outside its space");
  }
  StrategyProfile profile = with_action(g.game, seed_profile(g.game), 0, q1);
  return best_response(g.game, 1, profile, cfg);
}

SpneSolution solve_spne_numeric(const TwoPlayerGame& g,
                                const BrSolverConfig& cfg) {
  const Game& game = g.game;
  auto leader_value = [&](const ActionValue& q1) {
    const ActionValue q2 = follower_br_numeric(g, q1, cfg);
    StrategyProfile p = with_action(game, seed_profile(game), 0, q1);
    p = with_action(game, p, 1, q2);
    return std::pair<double, ActionValue>(evaluate_utility(game, 0, p), q2);
  };

  ActionValue best_q1;
  ActionValue best_q2;
  double best_u = -std::numeric_limits<double>::infinity();
  auto consider = [&](const ActionValue& q1) {
    auto [u, q2] = leader_value(q1);
    if (u > best_u) {
      best_u = u;
      best_q1 = q1;
      best_q2 = q2;
    }
  };

  const ActionSpace& leader_space = game.spaces[0];
  if (leader_space.is_finite()) {
    for (const auto& action : leader_space.finite_set().actions) {
      consider(action);
    }
  } else {
    const auto& iv = leader_space.bounds();
    auto scan = [&](double lo, double hi) {
      for (int k = 0; k < cfg.grid_points; ++k) {
        const double x =
            lo + (hi - lo) * static_cast<double>(k) / (cfg.grid_points - 1);
        consider(scalar_action(x));
      }
    };
    scan(iv.lo, iv.hi);
    double width = iv.hi - iv.lo;
    for (int r = 0; r < cfg.refine_rounds; ++r) {
      width *= cfg.refine_shrink;
      const double center = best_q1[0];
      scan(std::max(iv.lo, center - width / 2.0),
           std::min(iv.hi, center + width / 2.0));
    }
  }

  SpneSolution sol;
  sol.method = SpneMethod::NumericBilevel;
  sol.q1_star = best_q1.at(0);
  sol.q2_star = best_q2.at(0);
  StrategyProfile at = with_action(game, seed_profile(game), 0, best_q1);
  at = with_action(game, at, 1, best_q2);
  sol.leader_utility = evaluate_utility(game, 0, at);
  sol.follower_utility = evaluate_utility(game, 1, at);

  sol.interior = true;
  if (leader_space.is_interval()) {
    const auto& iv = leader_space.bounds();
    const double edge = 1e-9 * (iv.hi - iv.lo);
    sol.interior = sol.q1_star > iv.lo + edge && sol.q1_star < iv.hi - edge;
  }
  if (game.spaces[1].is_interval()) {
    const auto& iv = game.spaces[1].bounds();
    const double h = 1e-5 * (iv.hi - iv.lo);
    const bool q2_interior =
        sol.q2_star > iv.lo + h && sol.q2_star < iv.hi - h;
    sol.interior = sol.interior && q2_interior;
    if (q2_interior) {
      auto u2 = [&](double q2) {
        return evaluate_utility(game, 1,
                                with_action(game, at, 1, scalar_action(q2)));
      };
      sol.foc_residual =
          std::abs((u2(sol.q2_star + h) - u2(sol.q2_star - h)) / (2.0 * h));
    }
  }
  return sol;
}

}  // namespace gamelab
