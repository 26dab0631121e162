#ifndef GAMELAB_BUILTIN_HPP
#define GAMELAB_BUILTIN_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gamelab/game.hpp"
#include "gamelab/stackelberg.hpp"

namespace gamelab {

enum class GameKind {
  CournotLinear,
  StackelbergLinear,
  PrisonersDilemma,
  MatrixGame,
  CoordinationGame,
  DemandResponseToy,
};

std::string to_string(GameKind kind);
GameKind game_kind_from_string(const std::string& name);
std::vector<GameKind> all_game_kinds();

struct GameSpec {
  GameKind kind = GameKind::CournotLinear;
  nlohmann::json params;  // kind-specific parameter object

  bool operator==(const GameSpec&) const;
};

struct BuiltGame {
  Game game;
  std::optional<LinearDuopolyParams> duopoly;  // linear kinds only
  bool leader_follower = false;                // StackelbergLinear
  bool illustrative = false;                   // DemandResponseToy
  std::string description;
};

/// Instantiates a built-in game from its parameter map. Throws InvalidSpec
/// with a field-level message on missing or out-of-range parameters.
BuiltGame build_game(const GameSpec& spec);

/// One-line parameter documentation per kind, for `list-games`.
std::string describe_game_kind(GameKind kind);

}  // namespace gamelab

#endif  // GAMELAB_BUILTIN_HPP
