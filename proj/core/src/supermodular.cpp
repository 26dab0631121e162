#include "gamelab/supermodular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gamelab {

namespace {

constexpr double kPairTol = 1e-9;

std::vector<double> flatten(const StrategyProfile& p) {
  std::vector<double> out;
  for (int i = 0; i < p.size(); ++i) {
    out.insert(out.end(), p.at(i).begin(), p.at(i).end());
  }
  return out;
}

bool point_in_set(const std::vector<std::vector<double>>& points,
                  const std::vector<double>& x) {
  for (const auto& p : points) {
    if (actions_equal(p, x, kActionTol)) return true;
  }
  return false;
}

StrategyProfile random_profile(const Game& game, Rng& rng) {
  std::vector<ActionValue> actions(game.n_players);
  for (int i = 0; i < game.n_players; ++i) {
    const auto& space = game.spaces[i];
    if (space.is_finite()) {
      const auto& list = space.finite_set().actions;
      actions[i] = list[rng.next_index(list.size())];
    } else {
      const auto& iv = space.bounds();
      actions[i] = scalar_action(rng.next_in(iv.lo, iv.hi));
    }
  }
  return StrategyProfile(std::move(actions));
}

std::vector<StrategyProfile> enumerate_joint_profiles(const Game& game,
                                                      std::uint64_t cap) {
  std::uint64_t total = 1;
  for (const auto& space : game.spaces) {
    if (!space.is_finite()) {
      throw NotFiniteGame("joint enumeration requires finite spaces");
    }
    const std::size_t s = space.finite_set().actions.size();
    if (s == 0) return {};
    if (total > cap / s) throw ProductTooLarge("joint space exceeds cap");
    total *= s;
  }
  std::vector<StrategyProfile> out;
  out.reserve(total);
  std::vector<std::size_t> idx(game.n_players, 0);
  while (true) {
    std::vector<ActionValue> actions(game.n_players);
    for (int i = 0; i < game.n_players; ++i) {
      actions[i] = game.spaces[i].finite_set().actions[idx[i]];
    }
    out.emplace_back(std::move(actions));
    int pos = game.n_players - 1;
    while (pos >= 0 &&
           ++idx[pos] == game.spaces[pos].finite_set().actions.size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

std::vector<double> meet(const std::vector<double>& a,
                         const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::min(a[k], b[k]);
  return out;
}

std::vector<double> join(const std::vector<double>& a,
                         const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

StrategyProfile profile_meet(const StrategyProfile& a,
                             const StrategyProfile& b) {
  std::vector<ActionValue> actions(a.size());
  for (int i = 0; i < a.size(); ++i) actions[i] = meet(a.at(i), b.at(i));
  return StrategyProfile(std::move(actions));
}

StrategyProfile profile_join(const StrategyProfile& a,
                             const StrategyProfile& b) {
  std::vector<ActionValue> actions(a.size());
  for (int i = 0; i < a.size(); ++i) actions[i] = join(a.at(i), b.at(i));
  return StrategyProfile(std::move(actions));
}

LatticeCheck check_lattice_finite(
    const std::vector<std::vector<double>>& points) {
  LatticeCheck check;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t q = p + 1; q < points.size(); ++q) {
      const auto lo = meet(points[p], points[q]);
      const auto hi = join(points[p], points[q]);
      if (!point_in_set(points, lo) || !point_in_set(points, hi)) {
        check.ok = false;
        check.witness = "meet or join of a pair is not a member";
        check.counterexample = {points[p], points[q]};
        return check;
      }
    }
  }
  check.ok = true;
  check.witness = "closed under componentwise min and max";
  return check;
}

LatticeCheck check_game_lattice(const Game& game, std::uint64_t cap) {
  bool all_interval = true;
  bool all_finite = true;
  for (const auto& space : game.spaces) {
    all_interval = all_interval && space.is_interval();
    all_finite = all_finite && space.is_finite();
  }
  if (all_interval) {
    return {true, "box space", std::nullopt};
  }
  if (all_finite) {
    std::vector<std::vector<double>> points;
    for (const auto& profile : enumerate_joint_profiles(game, cap)) {
      points.push_back(flatten(profile));
    }
    return check_lattice_finite(points);
  }
  // Mixed product: intervals are chains; each finite factor must be closed
  // under componentwise min/max on its own.
  for (const auto& space : game.spaces) {
    if (!space.is_finite()) continue;
    LatticeCheck factor = check_lattice_finite(space.finite_set().actions);
    if (!factor.ok) return factor;
  }
  return {true, "product of chain and lattice factors", std::nullopt};
}

SupermodularUtilityResult check_supermodular_utility(const Game& game, int i,
                                                     int pairs, Rng& rng,
                                                     std::uint64_t cap) {
  SupermodularUtilityResult result;
  bool all_finite = true;
  for (const auto& space : game.spaces) {
    all_finite = all_finite && space.is_finite();
  }

  auto test_pair = [&](const StrategyProfile& a,
                       const StrategyProfile& b) -> bool {
    const double lhs =
        evaluate_utility(game, i, a) + evaluate_utility(game, i, b);
    const double rhs = evaluate_utility(game, i, profile_meet(a, b)) +
                       evaluate_utility(game, i, profile_join(a, b));
    if (lhs > rhs + kPairTol) {
      result.violation_found = true;
      result.counterexample = PairCounterexample{a, b, lhs, rhs};
      return true;
    }
    return false;
  };

  if (all_finite) {
    result.exhaustive = true;
    const auto profiles = enumerate_joint_profiles(game, cap);
    for (std::size_t p = 0; p < profiles.size(); ++p) {
      for (std::size_t q = p + 1; q < profiles.size(); ++q) {
        if (test_pair(profiles[p], profiles[q])) return result;
      }
    }
    return result;
  }

  result.exhaustive = false;
  for (int s = 0; s < pairs; ++s) {
    const StrategyProfile a = random_profile(game, rng);
    const StrategyProfile b = random_profile(game, rng);
    if (test_pair(a, b)) return result;
  }
  return result;
}

CrossPartialResult check_cross_partials(const Game& game, int i, int j,
                                        int points, double h, Rng& rng,
                                        double tol) {
  if (i == j) throw GameError("cross-partial players must be distinct");
  if (!game.spaces[i].is_interval() || !game.spaces[j].is_interval()) {
    throw NotFiniteGame("cross-partial check requires interval spaces");
  }
  if (h <= 0.0) throw DegenerateStep("stencil step must be positive");
  const auto& ivi = game.spaces[i].bounds();
  const auto& ivj = game.spaces[j].bounds();
  if (ivi.hi - ivi.lo <= 2.0 * h || ivj.hi - ivj.lo <= 2.0 * h) {
    throw DegenerateStep("interval too narrow for the four-point stencil");
  }

  CrossPartialResult result;
  result.min_value = std::numeric_limits<double>::infinity();
  for (int s = 0; s < points; ++s) {
    StrategyProfile base = random_profile(game, rng);
    // Re-sample until the stencil fits inside both intervals.
    while (base.scalar(i) - h < ivi.lo || base.scalar(i) + h > ivi.hi ||
           base.scalar(j) - h < ivj.lo || base.scalar(j) + h > ivj.hi) {
      ++result.resampled;
      base = random_profile(game, rng);
    }
    const double ai = base.scalar(i);
    const double aj = base.scalar(j);
    auto u_at = [&](double xi, double xj) {
      StrategyProfile p = with_action(game, base, i, scalar_action(xi));
      p = with_action(game, p, j, scalar_action(xj));
      return evaluate_utility(game, i, p);
    };
    const double estimate =
        (u_at(ai + h, aj + h) - u_at(ai + h, aj - h) - u_at(ai - h, aj + h) +
         u_at(ai - h, aj - h)) /
        (4.0 * h * h);
    if (estimate < result.min_value) {
      result.min_value = estimate;
      result.argmin = base;
    }
  }
  result.nonnegative = result.min_value >= -tol;
  return result;
}

BrPropertyReport check_br_properties(const Game& game,
                                     const BrPropertyConfig& prop, Rng& rng,
                                     const BrSolverConfig& cfg) {
  for (const auto& space : game.spaces) {
    if (!space.is_interval()) {
      throw NotFiniteGame("BR property checks require scalar interval spaces");
    }
  }
  BrPropertyReport report;
  report.grid_resolution = cfg.grid_points;
  for (const auto& space : game.spaces) {
    if (space.bounds().lo < 0.0) report.positivity_applicable = false;
  }
  for (double alpha : prop.alphas) {
    if (alpha <= 1.0) throw GameError("scalability requires alpha > 1");
    for (const auto& space : game.spaces) {
      if (space.bounds().hi / alpha < space.bounds().lo) {
        throw ScalabilityDomainError("hi / alpha below lo for some player");
      }
    }
  }

  for (int s = 0; s < prop.profiles; ++s) {
    const StrategyProfile base = random_profile(game, rng);
    for (int i = 0; i < game.n_players; ++i) {
      const auto& iv = game.spaces[i].bounds();

      // Uniqueness: count tolerance-distinct optima clusters on the base grid.
      std::vector<double> grid_u(cfg.grid_points);
      double umax = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < cfg.grid_points; ++k) {
        const double x = iv.lo + (iv.hi - iv.lo) * static_cast<double>(k) /
                                     (cfg.grid_points - 1);
        grid_u[k] = evaluate_utility(
            game, i, with_action(game, base, i, scalar_action(x)));
        umax = std::max(umax, grid_u[k]);
      }
      int clusters = 0;
      bool in_cluster = false;
      for (int k = 0; k < cfg.grid_points; ++k) {
        const bool near_max = grid_u[k] >= umax - prop.utility_tie_tol;
        if (near_max && !in_cluster) ++clusters;
        in_cluster = near_max;
      }
      if (clusters != 1) {
        report.uniqueness_ok = false;
        std::ostringstream os;
        os << clusters << " tolerance-distinct optima at grid resolution "
           << cfg.grid_points;
        report.violations.push_back({i, "uniqueness", base, os.str()});
      }

      if (report.positivity_applicable) {
        const ActionValue br = best_response(game, i, base, cfg);
        if (!(br[0] > 0.0)) {
          report.positivity_ok = false;
          std::ostringstream os;
          os << "BR = " << br[0] << " is not strictly positive";
          report.violations.push_back({i, "positivity", base, os.str()});
        }
      }
    }

    for (double alpha : prop.alphas) {
      // Sample from the shrunk region so the scaled profile stays in-space.
      std::vector<ActionValue> shrunk(game.n_players);
      for (int i = 0; i < game.n_players; ++i) {
        const auto& iv = game.spaces[i].bounds();
        const double lo = std::max(iv.lo, iv.lo / alpha);
        shrunk[i] = scalar_action(rng.next_in(lo, iv.hi / alpha));
      }
      const StrategyProfile a(shrunk);
      std::vector<ActionValue> scaled(game.n_players);
      for (int i = 0; i < game.n_players; ++i) {
        scaled[i] = scalar_action(alpha * a.scalar(i));
      }
      const StrategyProfile alpha_a(scaled);
      for (int i = 0; i < game.n_players; ++i) {
        const double br_a = best_response(game, i, a, cfg)[0];
        const double br_alpha_a = best_response(game, i, alpha_a, cfg)[0];
        if (!(alpha * br_a > br_alpha_a + prop.scal_margin)) {
          report.scalability_ok = false;
          std::ostringstream os;
          os << "alpha=" << alpha << ": alpha*BR=" << alpha * br_a
             << " vs BR(alpha*a)=" << br_alpha_a;
          report.violations.push_back({i, "scalability", a, os.str()});
        }
      }
    }
  }
  return report;
}

SupermodularReport diagnose_supermodular(const Game& game,
                                         const DiagnoseConfig& cfg, Rng& rng,
                                         const BrSolverConfig& solver) {
  SupermodularReport report;
  report.lattice = check_game_lattice(game);

  bool any_violation = !report.lattice.ok;
  bool all_exhaustive = true;
  for (int i = 0; i < game.n_players; ++i) {
    report.per_player.push_back(
        check_supermodular_utility(game, i, cfg.pairs, rng));
    any_violation = any_violation || report.per_player.back().violation_found;
    all_exhaustive = all_exhaustive && report.per_player.back().exhaustive;
  }

  bool all_interval = true;
  for (const auto& space : game.spaces) {
    all_interval = all_interval && space.is_interval();
  }
  bool cross_all_nonneg = all_interval;
  if (all_interval) {
    for (int i = 0; i < game.n_players; ++i) {
      for (int j = 0; j < game.n_players; ++j) {
        if (i == j) continue;
        const auto& ivi = game.spaces[i].bounds();
        const auto& ivj = game.spaces[j].bounds();
        const double h =
            cfg.h_rel * std::min(ivi.hi - ivi.lo, ivj.hi - ivj.lo);
        auto result =
            check_cross_partials(game, i, j, cfg.cross_points, h, rng);
        cross_all_nonneg = cross_all_nonneg && result.nonnegative;
        report.cross_partials.push_back({i, j, std::move(result)});
      }
    }
    if (cfg.run_br_properties) {
      report.br_properties = check_br_properties(game, cfg.br, rng, solver);
    }
  }

  if (any_violation) {
    report.verdict = SupermodularVerdict::NotSupermodular;
  } else if (all_exhaustive || (all_interval && cross_all_nonneg)) {
    // Exhaustive pairwise pass, or the cross-partial sufficient condition
    // sampled clean on a box space.
    report.verdict = SupermodularVerdict::Supermodular;
  } else {
    report.verdict = SupermodularVerdict::Inconclusive;
  }
  return report;
}

}  // namespace gamelab
