#include "gamelab/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gamelab {

ActionValue scalar_action(double x) { return ActionValue{x}; }

bool actions_equal(const ActionValue& a, const ActionValue& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

ActionSpace ActionSpace::finite(std::vector<ActionValue> actions) {
  return ActionSpace(Finite{std::move(actions)});
}

ActionSpace ActionSpace::finite_scalars(std::vector<double> values) {
  std::vector<ActionValue> actions;
  actions.reserve(values.size());
  for (double v : values) actions.push_back(scalar_action(v));
  return finite(std::move(actions));
}

ActionSpace ActionSpace::interval(double lo, double hi) {
  return ActionSpace(Interval{lo, hi});
}

bool ActionSpace::contains(const ActionValue& a, double tol) const {
  if (is_finite()) return index_of(a, tol).has_value();
  const auto& iv = bounds();
  return a.size() == 1 && a[0] >= iv.lo - tol && a[0] <= iv.hi + tol;
}

std::optional<std::size_t> ActionSpace::index_of(const ActionValue& a,
                                                 double tol) const {
  if (!is_finite()) return std::nullopt;
  const auto& list = finite_set().actions;
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (actions_equal(list[k], a, tol)) return k;
  }
  return std::nullopt;
}

std::string ActionSpace::validity_error() const {
  if (is_finite()) {
    const auto& list = finite_set().actions;
    if (list.empty()) return "empty action set";
    const std::size_t dim = list.front().size();
    if (dim == 0) return "zero-dimensional action";
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (list[k].size() != dim) return "actions have mixed dimensions";
      for (double x : list[k]) {
        if (!std::isfinite(x)) return "non-finite action component";
      }
      for (std::size_t m = 0; m < k; ++m) {
        if (actions_equal(list[m], list[k])) return "duplicate actions";
      }
    }
    return {};
  }
  const auto& iv = bounds();
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
    return "interval bounds must be finite";
  }
  if (!(iv.lo < iv.hi)) return "interval requires lo < hi";
  return {};
}

StrategyProfile StrategyProfile::scalars(std::vector<double> values) {
  std::vector<ActionValue> actions;
  actions.reserve(values.size());
  for (double v : values) actions.push_back(scalar_action(v));
  return StrategyProfile(std::move(actions));
}

bool profiles_equal(const StrategyProfile& a, const StrategyProfile& b,
                    double tol) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (!actions_equal(a.at(i), b.at(i), tol)) return false;
  }
  return true;
}

double profile_distance(const StrategyProfile& a, const StrategyProfile& b) {
  double d = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    const auto& x = a.at(i);
    const auto& y = b.at(i);
    if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < x.size(); ++k) {
      d = std::max(d, std::abs(x[k] - y[k]));
    }
  }
  return d;
}

ValidationReport validate_game(const Game& game) {
  ValidationReport report;
  report.all_ok = game.n_players >= 1 &&
                  static_cast<int>(game.spaces.size()) == game.n_players;
  if (static_cast<int>(game.spaces.size()) != game.n_players) {
    report.players.push_back(
        {-1, false, "spaces length does not match player count"});
  }
  for (std::size_t i = 0; i < game.spaces.size(); ++i) {
    std::string err = game.spaces[i].validity_error();
    report.players.push_back(
        {static_cast<int>(i), err.empty(), err.empty() ? "ok" : err});
    if (!err.empty()) report.all_ok = false;
  }
  return report;
}

void require_valid_profile(const Game& game, const StrategyProfile& profile) {
  if (profile.size() != game.n_players) {
    std::ostringstream os;
    os << "profile has " << profile.size() << " actions, game has "
       << game.n_players << " players";
    throw InvalidProfile(os.str());
  }
  for (int i = 0; i < profile.size(); ++i) {
    if (!game.spaces[i].contains(profile.at(i))) {
      std::ostringstream os;
      os << "action of player " << i << " lies outside its space";
      throw InvalidProfile(os.str());
    }
  }
}

double evaluate_utility(const Game& game, int player,
                        const StrategyProfile& profile) {
  const double u = game.utility(player, profile);
  if (!std::isfinite(u)) {
    std::ostringstream os;
    os << "utility of player " << player << " is not finite";
    throw NonFiniteUtility(os.str());
  }
  return u;
}

std::vector<double> evaluate_utilities(const Game& game,
                                       const StrategyProfile& profile) {
  require_valid_profile(game, profile);
  std::vector<double> out(game.n_players);
  for (int i = 0; i < game.n_players; ++i) {
    out[i] = evaluate_utility(game, i, profile);
  }
  return out;
}

StrategyProfile with_action(const Game& game, const StrategyProfile& profile,
                            int i, ActionValue a) {
  if (i < 0 || i >= profile.size()) {
    throw InvalidProfile("player index out of range");
  }
  if (!game.spaces[i].contains(a)) {
    throw ActionOutOfSpace("action lies outside the player's space");
  }
  std::vector<ActionValue> actions = profile.actions();
  actions[i] = std::move(a);
  return StrategyProfile(std::move(actions));
}

}  // namespace gamelab
