#include "doctest.h"

#include "blackwell/errors.hpp"
#include "blackwell/game.hpp"

using namespace blackwell;

namespace {

StageGame pd() {
  // Prisoner's dilemma used across the test suite:
  // C,C -> (2,2); C,D -> (-1,3); D,C -> (3,-1); D,D -> (0,0).
  std::vector<std::vector<std::string>> names = {{"C", "D"}, {"C", "D"}};
  std::vector<RationalVector> payoffs = {
      {Rational(2), Rational(2)},
      {Rational(-1), Rational(3)},
      {Rational(3), Rational(-1)},
      {Rational(0), Rational(0)},
  };
  return StageGame(names, payoffs);
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("profile indexing round trips with player 0 most significant") {
  StageGame g = pd();
  CHECK(g.num_profiles() == 4);
  CHECK(g.profile_index({0, 1}) == 1);
  CHECK(g.profile_index({1, 0}) == 2);
  auto back = g.profile_actions(2);
  CHECK(back == std::vector<int>{1, 0});
  CHECK(g.payoff(2, 0) == Rational(3));
  CHECK(g.payoff(2, 1) == Rational(-1));
}

TEST_CASE("expected reward on the uniform mixed profile") {
  StageGame g = pd();
  MixedProfile half{{MixedAction{{Rational(1, 2), Rational(1, 2)}},
                     MixedAction{{Rational(1, 2), Rational(1, 2)}}}};
  auto r = expected_reward(g, half);
  CHECK(r[0] == Rational(1));
  CHECK(r[1] == Rational(1));
  // Deviating to D against the opponent half-mix: (3 + 0) / 2.
  CHECK(deviation_reward(g, 0, 1, half) == Rational(3, 2));
  CHECK(deviation_reward(g, 0, 0, half) == Rational(1, 2));
}

TEST_CASE("pure profiles expose support and action names") {
  StageGame g = pd();
  auto p = MixedProfile::pure({1, 1}, g);
  CHECK(p.is_pure());
  CHECK(p.pure_actions() == std::vector<int>{1, 1});
  CHECK(support_of(p).supports[0] == std::vector<int>{1});
  auto r = expected_reward(g, p);
  CHECK(r[0] == Rational(0));
}

TEST_CASE("profile validation rejects malformed mixtures") {
  StageGame g = pd();
  MixedProfile bad{{MixedAction{{Rational(1, 2), Rational(1, 3)}},
                    MixedAction{{Rational(1), Rational(0)}}}};
  CHECK_THROWS_AS(validate_mixed_profile(g, bad), InputError);
  MixedProfile neg{{MixedAction{{Rational(3, 2), Rational(-1, 2)}},
                    MixedAction{{Rational(1), Rational(0)}}}};
  CHECK_THROWS_AS(validate_mixed_profile(g, neg), InputError);
}

TEST_CASE("payoff extremes are tracked") {
  StageGame g = pd();
  CHECK(g.max_abs_payoff() == Rational(3));
  CHECK(g.min_payoff(0) == Rational(-1));
  CHECK(g.max_payoff(1) == Rational(3));
}

TEST_SUITE_END();
