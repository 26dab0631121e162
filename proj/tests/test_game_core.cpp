#include <doctest.h>

#include "gamelab/game.hpp"
#include "test_support.hpp"

using namespace gamelab;
using testsupport::cournot_game;
using testsupport::prisoners_dilemma;

TEST_CASE("evaluate_utilities on the linear duopoly") {
  const Game game = cournot_game(10, 1, 2, 2);
  const auto u = evaluate_utilities(game, StrategyProfile::scalars({4, 2}));
  // p = 10 - 6 = 4; profits (4-2)*4 and (4-2)*2.
  CHECK(u[0] == doctest::Approx(8.0));
  CHECK(u[1] == doctest::Approx(4.0));
}

TEST_CASE("constant-zero evaluator yields zero utility") {
  Game game{1, {ActionSpace::interval(0, 1)},
            [](int, const StrategyProfile&) { return 0.0; }};
  CHECK(evaluate_utilities(game, StrategyProfile::scalars({0.5}))[0] == 0.0);
}

TEST_CASE("prisoner's dilemma table lookup") {
  const Game game = prisoners_dilemma();
  const auto u = evaluate_utilities(game, StrategyProfile::scalars({1, 1}));
  CHECK(u[0] == 1.0);
  CHECK(u[1] == 1.0);
}

TEST_CASE("evaluate_utilities rejects invalid profiles") {
  const Game game = cournot_game(10, 1, 2, 2);
  CHECK_THROWS_AS(evaluate_utilities(game, StrategyProfile::scalars({4})),
                  InvalidProfile);
  CHECK_THROWS_AS(evaluate_utilities(game, StrategyProfile::scalars({4, 99})),
                  InvalidProfile);
}

TEST_CASE("evaluate_utilities flags non-finite evaluators") {
  Game game{1, {ActionSpace::interval(0, 1)},
            [](int, const StrategyProfile&) {
              return std::numeric_limits<double>::quiet_NaN();
            }};
  CHECK_THROWS_AS(evaluate_utilities(game, StrategyProfile::scalars({0.5})),
                  NonFiniteUtility);
}

TEST_CASE("with_action replaces one coordinate") {
  const Game game = cournot_game(10, 1, 2, 2);
  const StrategyProfile p = StrategyProfile::scalars({1, 2});
  const StrategyProfile q = with_action(game, p, 0, scalar_action(5));
  CHECK(q.scalar(0) == 5.0);
  CHECK(q.scalar(1) == 2.0);
  CHECK(p.scalar(0) == 1.0);  // input unchanged

  const StrategyProfile r = with_action(game, p, 1, scalar_action(2));
  CHECK(r == p);  // idempotent when action matches
}

TEST_CASE("closed-interval membership at the boundary") {
  const Game game{2,
                  {ActionSpace::interval(0, 10), ActionSpace::interval(0, 10)},
                  [](int, const StrategyProfile&) { return 0.0; }};
  const StrategyProfile p = StrategyProfile::scalars({0, 0});
  CHECK(with_action(game, p, 0, scalar_action(10.0)).scalar(0) == 10.0);
  CHECK_THROWS_AS(with_action(game, p, 0, scalar_action(10.0001)),
                  ActionOutOfSpace);
}

TEST_CASE("validate_game reports per-player space problems") {
  SUBCASE("valid interval") {
    Game game{1, {ActionSpace::interval(0, 10)},
              [](int, const StrategyProfile&) { return 0.0; }};
    CHECK(validate_game(game).all_ok);
  }
  SUBCASE("empty finite set") {
    Game game{1, {ActionSpace::finite({})},
              [](int, const StrategyProfile&) { return 0.0; }};
    const auto report = validate_game(game);
    CHECK_FALSE(report.all_ok);
    CHECK(report.players[0].message == "empty action set");
  }
  SUBCASE("degenerate interval is rejected, not a singleton") {
    Game game{1, {ActionSpace::interval(3, 3)},
              [](int, const StrategyProfile&) { return 0.0; }};
    CHECK_FALSE(validate_game(game).all_ok);
  }
  SUBCASE("duplicate finite actions") {
    Game game{1, {ActionSpace::finite_scalars({1, 1})},
              [](int, const StrategyProfile&) { return 0.0; }};
    CHECK_FALSE(validate_game(game).all_ok);
  }
}

TEST_CASE("profile round-trip and membership closure properties") {
  const Game game = cournot_game(10, 1, 2, 2);
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const StrategyProfile p =
        StrategyProfile::scalars({rng.next_in(0, 10), rng.next_in(0, 10)});
    const int i = static_cast<int>(rng.next_index(2));
    const ActionValue a = scalar_action(rng.next_in(0, 10));
    const StrategyProfile q = with_action(game, p, i, a);
    CHECK_NOTHROW(require_valid_profile(game, q));
    CHECK(with_action(game, q, i, p.at(i)) == p);
  }
}

TEST_CASE("utility evaluation is deterministic") {
  const Game game = cournot_game(10, 1, 2, 2);
  const StrategyProfile p = StrategyProfile::scalars({3.14159, 2.71828});
  const auto u1 = evaluate_utilities(game, p);
  const auto u2 = evaluate_utilities(game, p);
  CHECK(u1 == u2);  // bitwise
}
