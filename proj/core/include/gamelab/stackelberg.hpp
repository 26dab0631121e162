#ifndef GAMELAB_STACKELBERG_HPP
#define GAMELAB_STACKELBERG_HPP

#include <optional>

#include "gamelab/dynamics.hpp"
#include "gamelab/game.hpp"

namespace gamelab {

/// Linear inverse demand p = a - b(q1 + q2) with constant marginal costs.
/// The closed-form solver is valid only for this family.
struct LinearDuopolyParams {
  double a = 0.0;
  double b = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;

  /// Interior positive-quantity equilibrium condition.
  bool interior() const { return a > c2 && a + c2 - 2.0 * c1 > 0.0; }
  double price(double q1, double q2) const { return a - b * (q1 + q2); }
  double leader_profit(double q1, double q2) const {
    return (price(q1, q2) - c1) * q1;
  }
  double follower_profit(double q1, double q2) const {
    return (price(q1, q2) - c2) * q2;
  }
};

enum class SpneMethod { Analytic, NumericBilevel };

struct SpneSolution {
  double q1_star = 0.0;
  double q2_star = 0.0;
  double leader_utility = 0.0;
  double follower_utility = 0.0;
  SpneMethod method = SpneMethod::Analytic;
  bool interior = true;
  /// |dΠ2/dq2| at the solution; populated for interior numeric solutions.
  std::optional<double> foc_residual;
};

/// Two-player game where player 0 commits first and player 1 responds.
struct TwoPlayerGame {
  Game game;

  explicit TwoPlayerGame(Game g) : game(std::move(g)) {
    if (game.n_players != 2) {
      throw GameError("leader-follower game requires exactly two players");
    }
  }
};

/// Follower reaction q2(q1) = (a - b q1 - c2) / (2b), clamped at zero.
double follower_br_analytic(const LinearDuopolyParams& p, double q1);

/// Closed-form SPNE: q1* = (a + c2 - 2 c1) / (2b),
/// q2* = (a - 3 c2 + 2 c1) / (4b). Non-interior solutions are flagged and
/// reported with quantities clamped at zero.
SpneSolution solve_spne_analytic(const LinearDuopolyParams& p);

/// Follower's numeric best response to a committed leader action.
ActionValue follower_br_numeric(const TwoPlayerGame& g, const ActionValue& q1,
                                const BrSolverConfig& cfg = {});

/// Backward induction: optimizes the leader utility through the follower's
/// numeric reaction, then reports the induced pair and a FOC residual
/// diagnostic when the solution is interior.
SpneSolution solve_spne_numeric(const TwoPlayerGame& g,
                                const BrSolverConfig& cfg = {});

}  // namespace gamelab

#endif  // GAMELAB_STACKELBERG_HPP
