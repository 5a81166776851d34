#include "doctest.h"

#include "blackwell/errors.hpp"
#include "blackwell/examples.hpp"
#include "blackwell/game_io.hpp"
#include "blackwell/monitoring.hpp"

using namespace blackwell;

TEST_SUITE_BEGIN("core");

TEST_CASE("public kernel properties are reported") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  auto rep = check_properties(g, ms);
  CHECK(rep.distributions_valid);
  CHECK(rep.full_support);
  CHECK(rep.min_probability == Rational(1, 10));
  CHECK_FALSE(rep.product_structure);
  CHECK_FALSE(rep.conditionally_independent);
}

TEST_CASE("private factors expose conditional independence and support") {
  auto g = make_hawk_dove();
  auto ms = hawk_dove_private_monitoring();
  auto rep = check_properties(g, ms);
  CHECK(rep.conditionally_independent);
  CHECK(rep.full_support);
  CHECK(rep.min_probability == Rational(1, 10));
  // Joint view multiplies the coordinates: after H,H both players see h
  // with probability 81/100.
  CHECK(ms.pi_joint[0][0] == Rational(81, 100));
  CHECK(ms.joint_components(1) == std::vector<int>{0, 1});
}

TEST_CASE("perfect monitoring reveals the profile") {
  auto g = make_prisoners_dilemma();
  auto ms = MonitoringStructure::perfect(g);
  CHECK(ms.num_joint_signals() == 4);
  CHECK(ms.pi_joint[2][2] == Rational(1));
  CHECK(ms.pi_joint[2][1] == Rational(0));
  auto rep = check_properties(g, ms);
  CHECK_FALSE(rep.full_support);
}

TEST_CASE("own action factors build the joint product kernel") {
  auto g = make_prisoners_dilemma();
  // Player i's coordinate equals own action with probability 3/4.
  RationalMatrix f = {{Rational(3, 4), Rational(1, 4)},
                      {Rational(1, 4), Rational(3, 4)}};
  auto ms = MonitoringStructure::make_public_product(
      {2, 2}, {{"c", "d"}, {"c", "d"}}, {f, f});
  // P(c,c | C,D) = 3/4 * 1/4.
  CHECK(ms.pi_joint[1][0] == Rational(3, 16));
  auto rep = check_properties(g, ms);
  CHECK(rep.product_structure);
  CHECK(rep.full_support);
}

TEST_CASE("individual full rank holds for the pd public kernel") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  auto profile = MixedProfile::pure({0, 0}, g);
  auto rep = ifr_check(g, ms, profile);
  CHECK(rep.all());
  CHECK(rep.rank == std::vector<int>{2, 2});
}

TEST_CASE("pairwise full rank fails with two signals and four needed rows") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  auto rep = pairwise_full_rank_check(g, ms, MixedProfile::pure({0, 0}, g));
  REQUIRE(rep.pairs.size() == 1);
  CHECK(rep.pairs[0].required == 3);
  CHECK(rep.pairs[0].rank == 2);
  CHECK_FALSE(rep.all());
}

TEST_CASE("test pair search maximizes the deviation drop") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  auto tp = find_test_pair(g, ms);
  REQUIRE(tp.has_value());
  // Mutual defection with the bad signal: leaving D,D raises P(good) from
  // 1/10 to 8/10, so the bad-signal event drops by 7/10. No other event
  // separates deviations this strongly.
  CHECK(tp->profile == std::vector<int>{1, 1});
  CHECK(tp->signals == std::vector<std::size_t>{1});
  CHECK(tp->q_star == Rational(9, 10));
  CHECK(tp->rho == Rational(7, 10));
}

TEST_CASE("test pair search can come up empty") {
  auto g = make_prisoners_dilemma();
  // Uninformative kernel: same row everywhere.
  auto ms = MonitoringStructure::make_public(
      {2, 2}, {"x", "y"},
      RationalMatrix(4, {Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(find_test_pair(g, ms).has_value());
}

TEST_CASE("game json round trips with monitoring blocks") {
  GameBundle b;
  b.name = "pd";
  b.game = make_prisoners_dilemma();
  b.monitoring = pd_public_monitoring();
  Json j = game_to_json(b);
  auto back = parse_game(j);
  CHECK(back.name == "pd");
  CHECK(back.game.num_profiles() == 4);
  CHECK(back.game.payoff(1, 0) == Rational(-1));
  REQUIRE(back.monitoring.has_value());
  CHECK(back.monitoring->pi_joint == b.monitoring->pi_joint);
  CHECK(game_to_json(back) == j);

  b.monitoring = pd_private_monitoring();
  auto back2 = parse_game(game_to_json(b));
  REQUIRE(back2.monitoring.has_value());
  CHECK(back2.monitoring->kind == MonitoringKind::Private);
  CHECK(back2.monitoring->factors == b.monitoring->factors);
}

TEST_CASE("game json accepts numbers, strings and rejects junk") {
  Json j = Json::parse(R"({
    "actions": [["a","b"],["x","y"]],
    "payoffs": [[[1, "1/2"], [0.25, 2]], [["-3", 0], [1, "0.5"]]]
  })");
  auto b = parse_game(j);
  CHECK(b.game.payoff(0, 1) == Rational(1, 2));
  CHECK(b.game.payoff(1, 0) == Rational(1, 4));
  CHECK(b.game.payoff(3, 1) == Rational(1, 2));

  Json bad = j;
  bad["payoffs"][0][0] = Json::array({1});
  CHECK_THROWS_AS(parse_game(bad), InputError);
}

TEST_SUITE_END();
