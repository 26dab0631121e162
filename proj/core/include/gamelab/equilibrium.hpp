#ifndef GAMELAB_EQUILIBRIUM_HPP
#define GAMELAB_EQUILIBRIUM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gamelab/dynamics.hpp"
#include "gamelab/game.hpp"

namespace gamelab {

struct Deviation {
  ActionValue action;
  double gain = 0.0;
};

struct NashVerdict {
  bool is_nash = false;
  double eps = 0.0;
  std::optional<int> worst_player;
  std::optional<Deviation> worst_deviation;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Tests the unilateral-deviation inequality for every player using the
/// best-response machinery; staying put is always a candidate, so the
/// reported gain is never negative.
NashVerdict is_epsilon_nash(const Game& game, const StrategyProfile& profile,
                            double eps, const BrSolverConfig& cfg = {});

/// Exhaustive pure-equilibrium enumeration for all-finite games, in
/// lexicographic profile order. An empty result is a valid outcome.
std::vector<StrategyProfile> enumerate_pure_nash_finite(
    const Game& game, double eps, std::uint64_t cap = kDefaultEnumerationCap);

/// Discretized oracle for all-interval games: enumerates equilibria of the
/// `resolution`-point grid game, polishes each candidate locally, and merges
/// near-coincident results keeping the one with the smallest deviation gain.
std::vector<StrategyProfile> grid_nash_candidates(
    const Game& game, int resolution, double eps, const BrSolverConfig& cfg = {},
    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace gamelab

#endif  // GAMELAB_EQUILIBRIUM_HPP
