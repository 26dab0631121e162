#ifndef GAMELAB_SUPERMODULAR_HPP
#define GAMELAB_SUPERMODULAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamelab/dynamics.hpp"
#include "gamelab/equilibrium.hpp"
#include "gamelab/game.hpp"
#include "gamelab/rng.hpp"

namespace gamelab {

/// Componentwise minimum / maximum over equally sized vectors.
std::vector<double> meet(const std::vector<double>& a,
                         const std::vector<double>& b);
std::vector<double> join(const std::vector<double>& a,
                         const std::vector<double>& b);

StrategyProfile profile_meet(const StrategyProfile& a,
                             const StrategyProfile& b);
StrategyProfile profile_join(const StrategyProfile& a,
                             const StrategyProfile& b);

struct LatticeCheck {
  bool ok = false;
  std::string witness;  // "box space" for interval games
  std::optional<std::pair<std::vector<double>, std::vector<double>>>
      counterexample;
};

/// Closure of an explicit point set under componentwise min and max.
LatticeCheck check_lattice_finite(const std::vector<std::vector<double>>& points);

/// Lattice check for a game's joint action space. Interval (box) spaces are
/// lattices by construction; finite games enumerate the joint product.
LatticeCheck check_game_lattice(const Game& game,
                                std::uint64_t cap = kDefaultEnumerationCap);

struct PairCounterexample {
  StrategyProfile a;
  StrategyProfile b;
  double lhs = 0.0;  // f(a) + f(b)
  double rhs = 0.0;  // f(a ∧ b) + f(a ∨ b)
};

struct SupermodularUtilityResult {
  bool violation_found = false;
  bool exhaustive = false;  // pairwise-complete (finite) vs sampled (interval)
  std::optional<PairCounterexample> counterexample;
};

/// Tests f(a) + f(b) <= f(a ∧ b) + f(a ∨ b) for player i's utility: all
/// unordered pairs when every space is finite, `pairs` random joint pairs
/// otherwise. A sampled all-pass is evidence, not proof.
SupermodularUtilityResult check_supermodular_utility(
    const Game& game, int i, int pairs, Rng& rng,
    std::uint64_t cap = kDefaultEnumerationCap);

struct CrossPartialResult {
  double min_value = 0.0;
  StrategyProfile argmin;
  int resampled = 0;  // points re-drawn because the stencil left the space
  bool nonnegative = false;
};

inline constexpr double kCrossPartialTol = 1e-6;

/// Minimum over sampled interior points of the central four-point estimate
/// of d²u_i / da_i da_j. Spaces of i and j must be intervals.
CrossPartialResult check_cross_partials(const Game& game, int i, int j,
                                        int points, double h, Rng& rng,
                                        double tol = kCrossPartialTol);

struct BrPropertyConfig {
  int profiles = 100;
  std::vector<double> alphas = {1.5, 2.0};
  double utility_tie_tol = 1e-9;
  double scal_margin = 0.0;
};

struct BrPropertyViolation {
  int player = 0;
  std::string property;
  StrategyProfile profile;
  std::string detail;
};

struct BrPropertyReport {
  bool uniqueness_ok = true;
  bool positivity_ok = true;
  bool positivity_applicable = true;  // false when some interval has lo < 0
  bool scalability_ok = true;
  int grid_resolution = 0;  // resolution backing the uniqueness certificate
  std::vector<BrPropertyViolation> violations;
};

/// Sampled best-response uniqueness / positivity / scalability checks for
/// scalar continuous games.
BrPropertyReport check_br_properties(const Game& game,
                                     const BrPropertyConfig& prop, Rng& rng,
                                     const BrSolverConfig& cfg = {});

enum class SupermodularVerdict { Supermodular, NotSupermodular, Inconclusive };

struct SupermodularReport {
  LatticeCheck lattice;
  std::vector<SupermodularUtilityResult> per_player;  // index = player
  struct CrossPartialEntry {
    int i;
    int j;
    CrossPartialResult result;
  };
  std::vector<CrossPartialEntry> cross_partials;  // interval pairs only
  std::optional<BrPropertyReport> br_properties;
  SupermodularVerdict verdict = SupermodularVerdict::Inconclusive;
};

struct DiagnoseConfig {
  int pairs = 200;           // sampled supermodularity pairs per player
  int cross_points = 50;     // sampled stencil points per (i, j)
  double h_rel = 1e-4;       // stencil step as a fraction of interval width
  BrPropertyConfig br;
  bool run_br_properties = true;
};

/// Full diagnostic: lattice, per-player supermodular inequality, pairwise
/// cross-partials, and BR properties. Verdict is NotSupermodular on any
/// concrete counterexample; Supermodular when the lattice holds and either
/// every finite pair passes exhaustively or every sampled cross-partial is
/// non-negative (the sufficient condition on box spaces); else Inconclusive.
SupermodularReport diagnose_supermodular(const Game& game,
                                         const DiagnoseConfig& cfg, Rng& rng,
                                         const BrSolverConfig& solver = {});

}  // namespace gamelab

#endif  // GAMELAB_SUPERMODULAR_HPP
