#ifndef GAMELAB_GAME_HPP
#define GAMELAB_GAME_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gamelab/errors.hpp"

namespace gamelab {

/// Absolute tolerance used everywhere actions are compared for equality.
inline constexpr double kActionTol = 1e-9;

/// An action is a vector of reals. Continuous actions are scalar (size 1);
/// finite action sets may hold vectors of any shared dimension.
using ActionValue = std::vector<double>;

ActionValue scalar_action(double x);

bool actions_equal(const ActionValue& a, const ActionValue& b,
                   double tol = kActionTol);

/// A player's strategy space: either an explicit finite set of action
/// vectors or a closed bounded interval of scalar actions.
class ActionSpace {
 public:
  struct Finite {
    std::vector<ActionValue> actions;
  };
  struct Interval {
    double lo;
    double hi;
  };

  static ActionSpace finite(std::vector<ActionValue> actions);
  static ActionSpace finite_scalars(std::vector<double> values);
  static ActionSpace interval(double lo, double hi);

  bool is_finite() const { return std::holds_alternative<Finite>(rep_); }
  bool is_interval() const { return std::holds_alternative<Interval>(rep_); }

  const Finite& finite_set() const { return std::get<Finite>(rep_); }
  const Interval& bounds() const { return std::get<Interval>(rep_); }

  bool contains(const ActionValue& a, double tol = kActionTol) const;

  /// Lowest index of a matching action in a Finite space, if any.
  std::optional<std::size_t> index_of(const ActionValue& a,
                                      double tol = kActionTol) const;

  /// Invariant check; empty string means the space is valid.
  std::string validity_error() const;

 private:
  explicit ActionSpace(std::variant<Finite, Interval> rep)
      : rep_(std::move(rep)) {}
  std::variant<Finite, Interval> rep_;
};

/// One action per player, indexed by player id.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<ActionValue> actions)
      : actions_(std::move(actions)) {}
  static StrategyProfile scalars(std::vector<double> values);

  int size() const { return static_cast<int>(actions_.size()); }
  const ActionValue& at(int i) const { return actions_.at(i); }
  /// Scalar view of player i's action (first component).
  double scalar(int i) const { return actions_.at(i).at(0); }
  const std::vector<ActionValue>& actions() const { return actions_; }

  bool operator==(const StrategyProfile&) const = default;

 private:
  std::vector<ActionValue> actions_;
};

bool profiles_equal(const StrategyProfile& a, const StrategyProfile& b,
                    double tol = kActionTol);

/// Largest componentwise action difference between two equally sized profiles.
double profile_distance(const StrategyProfile& a, const StrategyProfile& b);

/// Maps (player index, joint profile) to a real payoff. Must be pure:
/// deterministic, side-effect free, and safe for concurrent evaluation.
using UtilityFunction = std::function<double(int, const StrategyProfile&)>;

struct Game {
  int n_players = 0;
  std::vector<ActionSpace> spaces;
  UtilityFunction utility;
};

struct ValidationReport {
  struct Entry {
    int player;
    bool ok;
    std::string message;
  };
  bool all_ok = false;
  std::vector<Entry> players;
};

/// Checks the representable equilibrium-existence hypotheses: per-player
/// spaces non-empty and compact (finite sets, or bounded closed intervals).
ValidationReport validate_game(const Game& game);

/// Throws InvalidProfile if the profile does not fit the game.
void require_valid_profile(const Game& game, const StrategyProfile& profile);

/// Per-player payoffs at a joint profile. Throws NonFiniteUtility if any
/// evaluator returns NaN or infinity.
std::vector<double> evaluate_utilities(const Game& game,
                                       const StrategyProfile& profile);

double evaluate_utility(const Game& game, int player,
                        const StrategyProfile& profile);

/// Copy of `profile` with player i's action replaced by `a`.
StrategyProfile with_action(const Game& game, const StrategyProfile& profile,
                            int i, ActionValue a);

}  // namespace gamelab

#endif  // GAMELAB_GAME_HPP
