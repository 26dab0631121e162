#include <doctest.h>

#include <cmath>

#include "gamelab/equilibrium.hpp"
#include "test_support.hpp"

using namespace gamelab;
using testsupport::cournot_game;
using testsupport::matching_pennies;
using testsupport::prisoners_dilemma;
using testsupport::random_matrix_game;

TEST_CASE("the simultaneous Cournot Nash passes the deviation check") {
  const Game game = cournot_game(10, 1, 2, 2);
  const double q = 8.0 / 3.0;  // (a - c) / (3b)
  const auto verdict =
      is_epsilon_nash(game, StrategyProfile::scalars({q, q}), 1e-6, {});
  CHECK(verdict.is_nash);
}

TEST_CASE("the origin admits a large deviation") {
  const Game game = cournot_game(10, 1, 2, 2);
  const auto verdict =
      is_epsilon_nash(game, StrategyProfile::scalars({0, 0}), 1e-6, {});
  CHECK_FALSE(verdict.is_nash);
  REQUIRE(verdict.worst_deviation.has_value());
  // Best deviation q = 4 earns (10-4)*4 - 2*4 = 16 over the current 0.
  CHECK(verdict.worst_deviation->gain == doctest::Approx(16.0).epsilon(1e-3));
  CHECK(verdict.worst_deviation->action[0] ==
        doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("mutual defection is a zero-eps equilibrium") {
  const auto verdict = is_epsilon_nash(prisoners_dilemma(),
                                       StrategyProfile::scalars({1, 1}), 0.0);
  CHECK(verdict.is_nash);
}

TEST_CASE("reported deviation gains are never negative") {
  const Game game = cournot_game(10, 1, 2, 4);
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const StrategyProfile p =
        StrategyProfile::scalars({rng.next_in(0, 10), rng.next_in(0, 10)});
    const auto verdict = is_epsilon_nash(game, p, 1e-6, {});
    REQUIRE(verdict.worst_deviation.has_value());
    CHECK(verdict.worst_deviation->gain >= 0.0);
  }
}

TEST_CASE("enumeration of pure equilibria in finite games") {
  SUBCASE("prisoner's dilemma has exactly mutual defection") {
    const auto eqs = enumerate_pure_nash_finite(prisoners_dilemma(), 0.0);
    REQUIRE(eqs.size() == 1);
    CHECK(eqs[0] == StrategyProfile::scalars({1, 1}));
  }
  SUBCASE("matching pennies has none") {
    CHECK(enumerate_pure_nash_finite(matching_pennies(), 0.0).empty());
  }
  SUBCASE("coordination game has both diagonal profiles") {
    GameSpec spec;
    spec.kind = GameKind::CoordinationGame;
    spec.params = nlohmann::json::object();
    const auto eqs = enumerate_pure_nash_finite(build_game(spec).game, 0.0);
    REQUIRE(eqs.size() == 2);
    CHECK(eqs[0] == StrategyProfile::scalars({0, 0}));
    CHECK(eqs[1] == StrategyProfile::scalars({1, 1}));
  }
  SUBCASE("interval games are rejected") {
    CHECK_THROWS_AS(enumerate_pure_nash_finite(cournot_game(10, 1, 2, 2), 0.0),
                    NotFiniteGame);
  }
  SUBCASE("the product cap is enforced") {
    Game big{2,
             {ActionSpace::finite_scalars(std::vector<double>(4000, 0.0)),
              ActionSpace::finite_scalars(std::vector<double>(4000, 0.0))},
             [](int, const StrategyProfile&) { return 0.0; }};
    CHECK_THROWS_AS(enumerate_pure_nash_finite(big, 0.0, 1000000),
                    ProductTooLarge);
  }
}

TEST_CASE("enumeration agrees with the per-profile deviation check") {
  Rng rng(123);
  for (int g = 0; g < 20; ++g) {
    const Game game = random_matrix_game(3, 3, rng);
    const auto eqs = enumerate_pure_nash_finite(game, 0.0);
    for (const auto& a0 : game.spaces[0].finite_set().actions) {
      for (const auto& a1 : game.spaces[1].finite_set().actions) {
        const StrategyProfile p({a0, a1});
        const bool enumerated =
            std::any_of(eqs.begin(), eqs.end(), [&](const StrategyProfile& e) {
              return profiles_equal(e, p);
            });
        CHECK(enumerated == is_epsilon_nash(game, p, 0.0).is_nash);
      }
    }
  }
}

TEST_CASE("affine rescaling changes no enumeration verdict") {
  Rng rng(77);
  const Game game = random_matrix_game(3, 3, rng);
  Game scaled = game;
  const UtilityFunction inner = game.utility;
  scaled.utility = [inner](int i, const StrategyProfile& s) {
    return 3.0 * inner(i, s) + 7.0;
  };
  CHECK(enumerate_pure_nash_finite(game, 0.0) ==
        enumerate_pure_nash_finite(scaled, 0.0));
}

TEST_CASE("grid candidates land on the analytic Cournot Nash") {
  SUBCASE("symmetric costs") {
    const Game game = cournot_game(10, 1, 2, 2);
    const auto candidates = grid_nash_candidates(game, 101, 0.05);
    REQUIRE(!candidates.empty());
    for (const auto& c : candidates) {
      CHECK(c.scalar(0) == doctest::Approx(8.0 / 3.0).epsilon(0.02));
      CHECK(c.scalar(1) == doctest::Approx(8.0 / 3.0).epsilon(0.02));
    }
  }
  SUBCASE("asymmetric costs") {
    // FOCs give q1 = (a - 2 c1 + c2)/(3b), q2 = (a - 2 c2 + c1)/(3b).
    const Game game = cournot_game(10, 1, 2, 4);
    const auto candidates = grid_nash_candidates(game, 101, 0.05);
    REQUIRE(!candidates.empty());
    for (const auto& c : candidates) {
      CHECK(c.scalar(0) == doctest::Approx(10.0 / 3.0).epsilon(0.02));
      CHECK(c.scalar(1) == doctest::Approx(4.0 / 3.0).epsilon(0.02));
    }
  }
}

TEST_CASE("constant utilities make every grid profile an eps-Nash") {
  Game flat{2,
            {ActionSpace::interval(0, 1), ActionSpace::interval(0, 1)},
            [](int, const StrategyProfile&) { return 1.0; }};
  const auto candidates = grid_nash_candidates(flat, 5, 1e-9);
  CHECK(candidates.size() == 25);
}

TEST_CASE("fixed points of best-response dynamics pass the Nash check") {
  const Game game = cournot_game(10, 1, 2, 4);
  BrSolverConfig cfg;
  cfg.refine_rounds = 6;
  Rng rng(0);
  const Trajectory traj = run_dynamics(
      game, StrategyProfile::scalars({0, 0}), DecisionRule::best_response(),
      {ScheduleKind::Synchronous}, cfg, {200, 1e-6}, rng);
  REQUIRE(traj.converged);
  CHECK(is_epsilon_nash(game, traj.final_profile(), 1e-3, cfg).is_nash);
}
