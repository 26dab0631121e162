#include "gamelab/equilibrium.hpp"

#include <algorithm>
#include <cmath>

namespace gamelab {

namespace {

std::uint64_t checked_product(const std::vector<std::size_t>& sizes,
                              std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t s : sizes) {
    if (s == 0) return 0;
    if (total > cap / s) throw ProductTooLarge("joint space exceeds cap");
    total *= s;
  }
  return total;
}

// Strict-improvement local refinement seeded at the incumbent, so that
// candidates with flat utility stay put.
double polish_scalar(const Game& game, int i, const StrategyProfile& profile,
                     double incumbent, double window,
                     const BrSolverConfig& cfg) {
  const auto& iv = game.spaces[i].bounds();
  double best_x = incumbent;
  double best_u = evaluate_utility(game, i, profile);
  double width = window;
  for (int r = 0; r <= cfg.refine_rounds; ++r) {
    const double wlo = std::max(iv.lo, best_x - width / 2.0);
    const double whi = std::min(iv.hi, best_x + width / 2.0);
    for (int k = 0; k < cfg.grid_points; ++k) {
      const double x = wlo + (whi - wlo) * static_cast<double>(k) /
                                 (cfg.grid_points - 1);
      const StrategyProfile cand =
          with_action(game, profile, i, scalar_action(x));
      const double u = evaluate_utility(game, i, cand);
      if (u > best_u) {
        best_u = u;
        best_x = x;
      }
    }
    width *= cfg.refine_shrink;
  }
  return best_x;
}

}  // namespace

NashVerdict is_epsilon_nash(const Game& game, const StrategyProfile& profile,
                            double eps, const BrSolverConfig& cfg) {
  require_valid_profile(game, profile);
  NashVerdict verdict;
  verdict.eps = eps;
  double worst_gain = -1.0;
  for (int i = 0; i < game.n_players; ++i) {
    const double current = evaluate_utility(game, i, profile);
    const ActionValue br = best_response(game, i, profile, cfg);
    const StrategyProfile deviated = with_action(game, profile, i, br);
    const double gained = evaluate_utility(game, i, deviated) - current;
    // Staying is always a candidate deviation, so the gain floors at zero.
    const double gain = std::max(0.0, gained);
    if (gain > worst_gain) {
      worst_gain = gain;
      verdict.worst_player = i;
      verdict.worst_deviation = Deviation{gain > 0.0 ? br : profile.at(i), gain};
    }
  }
  verdict.is_nash = worst_gain <= eps;
  return verdict;
}

std::vector<StrategyProfile> enumerate_pure_nash_finite(const Game& game,
                                                        double eps,
                                                        std::uint64_t cap) {
  std::vector<std::size_t> sizes;
  sizes.reserve(game.spaces.size());
  for (const auto& space : game.spaces) {
    if (!space.is_finite()) {
      throw NotFiniteGame("enumeration requires all-finite action spaces");
    }
    sizes.push_back(space.finite_set().actions.size());
  }
  checked_product(sizes, cap);

  std::vector<StrategyProfile> equilibria;
  std::vector<std::size_t> idx(game.n_players, 0);
  while (true) {
    std::vector<ActionValue> actions(game.n_players);
    for (int i = 0; i < game.n_players; ++i) {
      actions[i] = game.spaces[i].finite_set().actions[idx[i]];
    }
    StrategyProfile profile(std::move(actions));

    bool is_nash = true;
    for (int i = 0; i < game.n_players && is_nash; ++i) {
      const double current = evaluate_utility(game, i, profile);
      for (const auto& alt : game.spaces[i].finite_set().actions) {
        const StrategyProfile deviated = with_action(game, profile, i, alt);
        if (evaluate_utility(game, i, deviated) - current > eps) {
          is_nash = false;
          break;
        }
      }
    }
    if (is_nash) equilibria.push_back(std::move(profile));

    // Lexicographic odometer, last player fastest.
    int pos = game.n_players - 1;
    while (pos >= 0 && ++idx[pos] == sizes[pos]) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return equilibria;
}

std::vector<StrategyProfile> grid_nash_candidates(const Game& game,
                                                  int resolution, double eps,
                                                  const BrSolverConfig& cfg,
                                                  std::uint64_t cap) {
  std::vector<ActionSpace> grid_spaces;
  std::vector<double> spacings;
  for (const auto& space : game.spaces) {
    if (!space.is_interval()) {
      throw NotFiniteGame("grid candidates require all-interval spaces");
    }
    const auto& iv = space.bounds();
    std::vector<double> points(resolution);
    for (int k = 0; k < resolution; ++k) {
      points[k] = iv.lo + (iv.hi - iv.lo) * static_cast<double>(k) /
                              (resolution - 1);
    }
    spacings.push_back((iv.hi - iv.lo) / (resolution - 1));
    grid_spaces.push_back(ActionSpace::finite_scalars(std::move(points)));
  }
  Game grid_game{game.n_players, std::move(grid_spaces), game.utility};
  std::vector<StrategyProfile> candidates =
      enumerate_pure_nash_finite(grid_game, eps, cap);

  // Local polish: alternate strict-improvement coordinate refinements within
  // a window of one grid cell until the candidate stops moving. On flat
  // utility plateaus nothing improves, so candidates stay where they were.
  constexpr int kMaxPolishPasses = 32;
  for (auto& candidate : candidates) {
    for (int pass = 0; pass < kMaxPolishPasses; ++pass) {
      double moved = 0.0;
      for (int i = 0; i < game.n_players; ++i) {
        const double x = polish_scalar(game, i, candidate, candidate.scalar(i),
                                       2.0 * spacings[i], cfg);
        moved = std::max(moved, std::abs(x - candidate.scalar(i)));
        candidate = with_action(game, candidate, i, scalar_action(x));
      }
      if (moved <= kActionTol) break;
    }
  }

  // Merge near-coincident candidates, keeping the smallest deviation gain.
  const double merge_tol = kActionTol * 10.0;
  std::vector<StrategyProfile> merged;
  std::vector<double> merged_gain;
  for (const auto& candidate : candidates) {
    const NashVerdict v = is_epsilon_nash(game, candidate, eps, cfg);
    const double gain = v.worst_deviation ? v.worst_deviation->gain : 0.0;
    bool absorbed = false;
    for (std::size_t m = 0; m < merged.size(); ++m) {
      if (profiles_equal(merged[m], candidate, merge_tol)) {
        if (gain < merged_gain[m]) {
          merged[m] = candidate;
          merged_gain[m] = gain;
        }
        absorbed = true;
        break;
      }
    }
    if (!absorbed) {
      merged.push_back(candidate);
      merged_gain.push_back(gain);
    }
  }
  return merged;
}

}  // namespace gamelab
