#include <doctest.h>

#include <cmath>

#include "gamelab/stackelberg.hpp"
#include "test_support.hpp"

using namespace gamelab;

namespace {

TwoPlayerGame linear_game(double a, double b, double c1, double c2) {
  return TwoPlayerGame(testsupport::cournot_game(a, b, c1, c2));
}

}  // namespace

TEST_CASE("analytic follower reaction") {
  const LinearDuopolyParams p{10, 1, 2, 2};
  CHECK(follower_br_analytic(p, 4) == doctest::Approx(2.0));
  CHECK(follower_br_analytic(p, 0) == doctest::Approx(4.0));  // (a-c2)/(2b)
  CHECK(follower_br_analytic(p, (p.a - p.c2) / p.b) == 0.0);  // demand gone
  CHECK(follower_br_analytic(p, 20) == 0.0);                  // clamped
}

TEST_CASE("analytic reaction matches a numeric argmax oracle") {
  const LinearDuopolyParams p{10, 1, 2, 2};
  const TwoPlayerGame g = linear_game(10, 1, 2, 2);
  for (double q1 : {0.0, 1.5, 4.0, 6.0}) {
    const StrategyProfile at = StrategyProfile::scalars({q1, 0});
    const double oracle = testsupport::dense_grid_argmax(g.game, 1, at);
    CHECK(follower_br_analytic(p, q1) == doctest::Approx(oracle).epsilon(1e-3));
  }
}

TEST_CASE("closed-form SPNE of the reference instance") {
  const SpneSolution sol = solve_spne_analytic({10, 1, 2, 2});
  CHECK(sol.q1_star == 4.0);
  CHECK(sol.q2_star == 2.0);
  CHECK(sol.interior);
  // price 10 - 6 = 4; profits (4-2)*4 and (4-2)*2.
  CHECK(sol.leader_utility == doctest::Approx(8.0));
  CHECK(sol.follower_utility == doctest::Approx(4.0));
}

TEST_CASE("symmetric costs: the leader produces exactly twice the follower") {
  for (double a : {6.0, 10.0, 20.0}) {
    for (double b : {0.5, 1.0, 2.0}) {
      for (double c : {0.0, 1.0, 2.0}) {
        const SpneSolution sol = solve_spne_analytic({a, b, c, c});
        REQUIRE(sol.q2_star > 0);
        CHECK(sol.q1_star / sol.q2_star == doctest::Approx(2.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("zero-margin market produces nothing") {
  const SpneSolution sol = solve_spne_analytic({5, 1, 5, 5});
  CHECK(sol.q1_star == 0.0);
  CHECK(sol.q2_star == 0.0);
  CHECK_FALSE(sol.interior);
}

TEST_CASE("substituting the leader optimum into the reaction recovers q2*") {
  // Algebraic check that the printed follower form follows from composing
  // the leader optimum with the reaction function.
  Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    LinearDuopolyParams p;
    p.a = rng.next_in(5, 25);
    p.b = rng.next_in(0.2, 3);
    p.c1 = rng.next_in(0, 2);
    p.c2 = rng.next_in(0, 2);
    const SpneSolution sol = solve_spne_analytic(p);
    if (!sol.interior) continue;
    CHECK(follower_br_analytic(p, sol.q1_star) ==
          doctest::Approx(sol.q2_star).epsilon(1e-12));
  }
}

TEST_CASE("numeric follower reaction") {
  const TwoPlayerGame g = linear_game(10, 1, 2, 2);
  SUBCASE("matches the analytic form") {
    CHECK(follower_br_numeric(g, scalar_action(4))[0] ==
          doctest::Approx(2.0).epsilon(1e-4));
  }
  SUBCASE("demand exhausted at the upper bound clamps to zero") {
    CHECK(follower_br_numeric(g, scalar_action(10))[0] ==
          doctest::Approx(0.0).epsilon(1e-4));
  }
  SUBCASE("constant follower utility ties to the lowest grid point") {
    Game flat = g.game;
    flat.utility = [](int i, const StrategyProfile& s) {
      return i == 0 ? s.scalar(0) : 1.0;
    };
    CHECK(follower_br_numeric(TwoPlayerGame(flat), scalar_action(3))[0] == 0.0);
  }
}

TEST_CASE("numeric bilevel solver agrees with the closed form") {
  const TwoPlayerGame g = linear_game(10, 1, 2, 2);
  const SpneSolution sol = solve_spne_numeric(g);
  CHECK(sol.q1_star == doctest::Approx(4.0).epsilon(1e-3));
  CHECK(sol.q2_star == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(sol.method == SpneMethod::NumericBilevel);
  REQUIRE(sol.foc_residual.has_value());
  CHECK(*sol.foc_residual <= 1e-2);
}

TEST_CASE("constant leader utility ties to the lowest grid point") {
  Game flat = linear_game(10, 1, 2, 2).game;
  const UtilityFunction inner = flat.utility;
  flat.utility = [inner](int i, const StrategyProfile& s) {
    return i == 0 ? 1.0 : inner(i, s);
  };
  const SpneSolution sol = solve_spne_numeric(TwoPlayerGame(flat));
  CHECK(sol.q1_star == 0.0);
  CHECK(sol.q2_star == doctest::Approx(4.0).epsilon(1e-4));  // BR to 0
}

TEST_CASE("nonlinear follower cost goes through the numeric path") {
  // C2(q2) = q2^2, so the reaction solves a - b q1 - 2b q2 - 2 q2 = 0.
  const double a = 10, b = 1;
  Game game{2,
            {ActionSpace::interval(0, 10), ActionSpace::interval(0, 10)},
            [a, b](int i, const StrategyProfile& s) {
              const double q1 = s.scalar(0);
              const double q2 = s.scalar(1);
              const double p = a - b * (q1 + q2);
              return i == 0 ? p * q1 - 2.0 * q1 : p * q2 - q2 * q2;
            }};
  const TwoPlayerGame g{game};
  // Hand-solved reaction at q1 = 2: (10 - 2) / 4 = 2.
  CHECK(follower_br_numeric(g, scalar_action(2))[0] ==
        doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("the follower reaction ignores the leader's payoff") {
  const TwoPlayerGame g = linear_game(10, 1, 2, 2);
  Game perturbed = g.game;
  const UtilityFunction inner = g.game.utility;
  perturbed.utility = [inner](int i, const StrategyProfile& s) {
    return i == 0 ? -5.0 * inner(i, s) + 100.0 : inner(i, s);
  };
  const TwoPlayerGame g2{perturbed};
  for (double q1 : {0.0, 2.0, 4.0, 7.5}) {
    CHECK(follower_br_numeric(g, scalar_action(q1)) ==
          follower_br_numeric(g2, scalar_action(q1)));
  }
}

TEST_CASE("commitment: the leader optimum equals the composed-objective argmax") {
  // Independent oracle: maximize u_leader(q1, BR_follower(q1)) over a dense
  // grid, with the inner reaction solved by the same dense oracle.
  const TwoPlayerGame g = linear_game(10, 1, 2, 2);
  double best_q1 = 0.0;
  double best_u = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 2000; ++k) {
    const double q1 = 10.0 * k / 2000.0;
    const StrategyProfile at = StrategyProfile::scalars({q1, 0});
    const double q2 = testsupport::dense_grid_argmax(g.game, 1, at, 2001);
    const double u = evaluate_utility(g.game, 0,
                                      StrategyProfile::scalars({q1, q2}));
    if (u > best_u) {
      best_u = u;
      best_q1 = q1;
    }
  }
  const SpneSolution sol = solve_spne_numeric(g);
  CHECK(sol.q1_star == doctest::Approx(best_q1).epsilon(1e-2));
}

TEST_CASE("follower action at the SPNE is an eps-best response") {
  const TwoPlayerGame g = linear_game(10, 1, 2, 2);
  const SpneSolution sol = solve_spne_numeric(g);
  const StrategyProfile at =
      StrategyProfile::scalars({sol.q1_star, sol.q2_star});
  const double current = evaluate_utility(g.game, 1, at);
  const double oracle_q2 = testsupport::dense_grid_argmax(g.game, 1, at);
  const double best = evaluate_utility(
      g.game, 1, with_action(g.game, at, 1, scalar_action(oracle_q2)));
  CHECK(best - current <= 1e-4);
}

TEST_CASE("two-player wrapper enforces N == 2") {
  Game solo{1, {ActionSpace::interval(0, 1)},
            [](int, const StrategyProfile&) { return 0.0; }};
  CHECK_THROWS_AS(TwoPlayerGame{solo}, GameError);
}
