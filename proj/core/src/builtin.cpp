#include "gamelab/builtin.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gamelab {

namespace {

using nlohmann::json;

double require_number(const json& params, const std::string& field,
                      GameKind kind) {
  if (!params.contains(field) || !params[field].is_number()) {
    throw InvalidSpec(to_string(kind) + ": missing or non-numeric field '" +
                      field + "'");
  }
  return params[field].get<double>();
}

double number_or(const json& params, const std::string& field, double fallback) {
  if (!params.contains(field)) return fallback;
  if (!params[field].is_number()) {
    throw InvalidSpec("non-numeric field '" + field + "'");
  }
  return params[field].get<double>();
}

LinearDuopolyParams duopoly_params(const json& params, GameKind kind) {
  LinearDuopolyParams p;
  p.a = require_number(params, "a", kind);
  p.b = require_number(params, "b", kind);
  p.c1 = require_number(params, "c1", kind);
  p.c2 = require_number(params, "c2", kind);
  if (!(p.b > 0.0)) throw InvalidSpec(to_string(kind) + ": b must be > 0");
  if (p.c1 < 0.0 || p.c2 < 0.0) {
    throw InvalidSpec(to_string(kind) + ": costs must be >= 0");
  }
  if (!(p.a > 0.0)) throw InvalidSpec(to_string(kind) + ": a must be > 0");
  return p;
}

Game linear_duopoly_game(const LinearDuopolyParams& p) {
  // Upper bound a/b (the demand-zero quantity) keeps the optimum interior.
  const double qmax = p.a / p.b;
  UtilityFunction u = [p](int i, const StrategyProfile& s) {
    const double q1 = s.scalar(0);
    const double q2 = s.scalar(1);
    return i == 0 ? p.leader_profit(q1, q2) : p.follower_profit(q1, q2);
  };
  return Game{2,
              {ActionSpace::interval(0.0, qmax),
               ActionSpace::interval(0.0, qmax)},
              std::move(u)};
}

Game matrix_game(const std::vector<std::vector<std::pair<double, double>>>&
                     payoffs) {
  const std::size_t rows = payoffs.size();
  const std::size_t cols = payoffs.front().size();
  std::vector<double> row_actions(rows);
  std::vector<double> col_actions(cols);
  for (std::size_t r = 0; r < rows; ++r) row_actions[r] = static_cast<double>(r);
  for (std::size_t c = 0; c < cols; ++c) col_actions[c] = static_cast<double>(c);
  UtilityFunction u = [payoffs](int i, const StrategyProfile& s) {
    const auto r = static_cast<std::size_t>(s.scalar(0));
    const auto c = static_cast<std::size_t>(s.scalar(1));
    const auto& cell = payoffs.at(r).at(c);
    return i == 0 ? cell.first : cell.second;
  };
  return Game{2,
              {ActionSpace::finite_scalars(row_actions),
               ActionSpace::finite_scalars(col_actions)},
              std::move(u)};
}

}  // namespace

std::string to_string(GameKind kind) {
  switch (kind) {
    case GameKind::CournotLinear: return "cournot_linear";
    case GameKind::StackelbergLinear: return "stackelberg_linear";
    case GameKind::PrisonersDilemma: return "prisoners_dilemma";
    case GameKind::MatrixGame: return "matrix_game";
    case GameKind::CoordinationGame: return "coordination_game";
    case GameKind::DemandResponseToy: return "demand_response_toy";
  }
  return "unknown";
}

GameKind game_kind_from_string(const std::string& name) {
  for (GameKind kind : all_game_kinds()) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidSpec("unknown game kind '" + name + "'");
}

std::vector<GameKind> all_game_kinds() {
  return {GameKind::CournotLinear,    GameKind::StackelbergLinear,
          GameKind::PrisonersDilemma, GameKind::MatrixGame,
          GameKind::CoordinationGame, GameKind::DemandResponseToy};
}

bool GameSpec::operator==(const GameSpec& other) const {
  return kind == other.kind && params == other.params;
}

BuiltGame build_game(const GameSpec& spec) {
  BuiltGame built;
  switch (spec.kind) {
    case GameKind::CournotLinear: {
      const LinearDuopolyParams p = duopoly_params(spec.params, spec.kind);
      built.game = linear_duopoly_game(p);
      built.duopoly = p;
      built.description = "simultaneous linear-demand quantity duopoly";
      break;
    }
    case GameKind::StackelbergLinear: {
      const LinearDuopolyParams p = duopoly_params(spec.params, spec.kind);
      built.game = linear_duopoly_game(p);
      built.duopoly = p;
      built.leader_follower = true;
      built.description = "leader-follower linear-demand quantity duopoly";
      break;
    }
    case GameKind::PrisonersDilemma: {
      built.game = matrix_game({{{3, 3}, {0, 5}}, {{5, 0}, {1, 1}}});
      built.description =
          "2x2 prisoner's dilemma, action 0 = cooperate, 1 = defect";
      break;
    }
    case GameKind::MatrixGame: {
      if (!spec.params.contains("payoffs") ||
          !spec.params["payoffs"].is_array() ||
          spec.params["payoffs"].empty()) {
        throw InvalidSpec("matrix_game: 'payoffs' must be a non-empty array");
      }
      std::vector<std::vector<std::pair<double, double>>> payoffs;
      std::size_t cols = 0;
      for (const auto& row : spec.params["payoffs"]) {
        if (!row.is_array() || row.empty()) {
          throw InvalidSpec("matrix_game: payoff rows must be non-empty arrays");
        }
        if (cols == 0) cols = row.size();
        if (row.size() != cols) {
          throw InvalidSpec("matrix_game: ragged payoff matrix");
        }
        std::vector<std::pair<double, double>> cells;
        for (const auto& cell : row) {
          if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
              !cell[1].is_number()) {
            throw InvalidSpec(
                "matrix_game: each cell must be [row_payoff, col_payoff]");
          }
          cells.emplace_back(cell[0].get<double>(), cell[1].get<double>());
        }
        payoffs.push_back(std::move(cells));
      }
      built.game = matrix_game(payoffs);
      built.description = "two-player matrix game with explicit payoffs";
      break;
    }
    case GameKind::CoordinationGame: {
      const int n_actions =
          static_cast<int>(number_or(spec.params, "n_actions", 2));
      if (n_actions < 2) {
        throw InvalidSpec("coordination_game: n_actions must be >= 2");
      }
      std::vector<double> actions(n_actions);
      for (int k = 0; k < n_actions; ++k) actions[k] = k;
      UtilityFunction u = [](int, const StrategyProfile& s) {
        return s.scalar(0) == s.scalar(1) ? 1.0 : 0.0;
      };
      built.game = Game{2,
                        {ActionSpace::finite_scalars(actions),
                         ActionSpace::finite_scalars(actions)},
                        std::move(u)};
      built.description = "2-player pure coordination game";
      break;
    }
    case GameKind::DemandResponseToy: {
      const double v = require_number(spec.params, "v", spec.kind);
      const double kappa = require_number(spec.params, "kappa", spec.kind);
      const double pi_max = require_number(spec.params, "pi_max", spec.kind);
      const double d_max = require_number(spec.params, "d_max", spec.kind);
      const int consumers =
          static_cast<int>(require_number(spec.params, "consumers", spec.kind));
      if (consumers < 1) {
        throw InvalidSpec("demand_response_toy: consumers must be >= 1");
      }
      if (!(v > 0.0) || !(pi_max > 0.0) || !(d_max > 0.0) || kappa < 0.0) {
        throw InvalidSpec(
            "demand_response_toy: require v > 0, pi_max > 0, d_max > 0, "
            "kappa >= 0");
      }
      std::vector<ActionSpace> spaces;
      spaces.push_back(ActionSpace::interval(0.0, pi_max));
      for (int k = 0; k < consumers; ++k) {
        spaces.push_back(ActionSpace::interval(0.0, d_max));
      }
      const int n = consumers + 1;
      UtilityFunction u = [v, kappa, n](int i, const StrategyProfile& s) {
        const double pi = s.scalar(0);
        if (i == 0) {
          double total = 0.0;
          for (int k = 1; k < n; ++k) total += s.scalar(k);
          return pi * total - kappa * total * total;
        }
        const double d = s.scalar(i);
        return v * std::log1p(d) - pi * d;
      };
      built.game = Game{n, std::move(spaces), std::move(u)};
      built.illustrative = true;  // model: illustrative
      built.description =
          "illustrative price-setter vs log-utility consumers game";
      break;
    }
  }
  return built;
}

std::string describe_game_kind(GameKind kind) {
  switch (kind) {
    case GameKind::CournotLinear:
      return "params: a, b, c1, c2 (p = a - b(q1+q2), constant marginal costs)";
    case GameKind::StackelbergLinear:
      return "params: a, b, c1, c2; player 0 leads, player 1 follows";
    case GameKind::PrisonersDilemma:
      return "no params; payoffs (3,3) (0,5) (5,0) (1,1)";
    case GameKind::MatrixGame:
      return "params: payoffs = [[[u_row,u_col], ...], ...]";
    case GameKind::CoordinationGame:
      return "params: n_actions (default 2); u_i = 1 iff actions match";
    case GameKind::DemandResponseToy:
      return "params: v, kappa, pi_max, d_max, consumers (illustrative model)";
  }
  return "";
}

}  // namespace gamelab
