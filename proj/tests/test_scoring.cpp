#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "blackwell/equilibria.hpp"
#include "blackwell/examples.hpp"
#include "blackwell/scoring.hpp"

using namespace blackwell;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Independent check that an enforcement scheme does what it claims: the
// profile is a Nash equilibrium of the stage game augmented by the expected
// transfers, the reported value matches, and no transfer leaks value past
// the direction.
void check_scheme(const StageGame& game, const MonitoringStructure& ms,
                  const std::vector<double>& direction, const EnforcementScheme& es,
                  double tol = 1e-9) {
  const int n = game.num_players();
  const auto weights = es.profile.weights_d();
  const auto probs = profile_mix_probs(game, weights);
  const std::size_t m = ms.num_joint_signals();

  for (std::size_t y = 0; y < m; ++y) {
    double leak = 0;
    for (int i = 0; i < n; ++i) leak += direction[i] * es.transfers[y][i];
    CHECK(leak <= tol);
  }

  for (int i = 0; i < n; ++i) {
    // Augmented payoff of each own action against the others' mixture.
    std::vector<double> aug(game.num_actions(i), 0.0);
    for (std::size_t prof = 0; prof < game.num_profiles(); ++prof) {
      const auto acts = game.profile_actions(prof);
      double others = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) others *= weights[j][acts[j]];
      double val = game.payoff_d(prof, i);
      for (std::size_t y = 0; y < m; ++y)
        val += ms.pi_joint_d[prof][y] * es.transfers[y][i];
      aug[acts[i]] += others * val;
    }
    double mixed = 0;
    for (int a = 0; a < game.num_actions(i); ++a) mixed += weights[i][a] * aug[a];
    CHECK(std::abs(mixed - es.value[i]) <= tol);
    for (int a = 0; a < game.num_actions(i); ++a) {
      CHECK(aug[a] <= es.value[i] + tol);
      if (weights[i][a] > 1e-12) CHECK(std::abs(aug[a] - es.value[i]) <= tol);
    }
  }
  (void)probs;
}

std::vector<RationalVector> sorted_vertices(const PayoffPolytope& poly) {
  auto v = poly.vertices;
  std::sort(v.begin(), v.end(), [](const RationalVector& a, const RationalVector& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  return v;
}

bool has_vertex_near(const PayoffPolytope& poly, double x, double y, double tol) {
  for (const auto& v : poly.vertices)
    if (std::abs(to_double(v[0]) - x) <= tol && std::abs(to_double(v[1]) - y) <= tol)
      return true;
  return false;
}

StageGame random_product_game(std::mt19937& rng) {
  std::uniform_int_distribution<int> pay(-4, 4);
  std::vector<RationalVector> payoffs;
  for (int p = 0; p < 4; ++p) payoffs.push_back({Rational(pay(rng)), Rational(pay(rng))});
  return StageGame({{"a0", "a1"}, {"b0", "b1"}}, std::move(payoffs));
}

// Own-action signal factors with distinct rows, so each player's actions are
// statistically identified by the own coordinate.
MonitoringStructure random_product_monitoring(std::mt19937& rng) {
  std::uniform_int_distribution<int> ten(1, 9);
  std::vector<RationalMatrix> factors;
  for (int i = 0; i < 2; ++i) {
    int a = ten(rng), b = ten(rng);
    while (b == a) b = ten(rng);
    factors.push_back({{Rational(a, 10), Rational(10 - a, 10)},
                       {Rational(b, 10), Rational(10 - b, 10)}});
  }
  return MonitoringStructure::make_public_product({2, 2}, {{"g0", "b0"}, {"g1", "b1"}},
                                                  std::move(factors));
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("one-shot score of the noisy prisoners dilemma toward joint value") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  const std::vector<double> dir = {kInvSqrt2, kInvSqrt2};

  auto cc = fl_score(g, ms, dir, MixedProfile::pure({0, 0}, g));
  REQUIRE(cc.feasible);
  CHECK(cc.score == doctest::Approx(2.0 * kInvSqrt2).epsilon(1e-9));
  check_scheme(g, ms, dir, cc.witness);

  // Cooperation against defection scores the same total: the sum of payoffs
  // at (C,D) also sits on the v1+v2=2 line and the lone deviation gain is
  // deterred through the signal at no expected cost in this direction.
  auto cd = fl_score(g, ms, dir, MixedProfile::pure({0, 1}, g));
  REQUIRE(cd.feasible);
  CHECK(cd.score == doctest::Approx(2.0 * kInvSqrt2).epsilon(1e-9));
  check_scheme(g, ms, dir, cd.witness);
}

TEST_CASE("one-shot score in a lowering direction is free at the stage equilibrium") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  const std::vector<double> dir = {-1.0, 0.0};
  auto dd = fl_score(g, ms, dir, MixedProfile::pure({1, 1}, g));
  REQUIRE(dd.feasible);
  CHECK(std::abs(dd.score) <= 1e-9);
  check_scheme(g, ms, dir, dd.witness);
}

TEST_CASE("pure limit set of the noisy prisoners dilemma is the exact triangle") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  auto set = limit_set_pure(g, ms);
  REQUIRE_FALSE(set.empty);
  REQUIRE(set.vertices.size() == 3);
  auto v = sorted_vertices(set);
  CHECK(v[0] == RationalVector{Rational(0), Rational(0)});
  CHECK(v[1] == RationalVector{Rational(1, 4), Rational(7, 4)});
  CHECK(v[2] == RationalVector{Rational(7, 4), Rational(1, 4)});
  // Both cooperative vertices sit exactly on the joint-value line.
  CHECK(v[1][0] + v[1][1] == Rational(2));
  CHECK(v[2][0] + v[2][1] == Rational(2));
}

TEST_CASE("pure limit set under perfect monitoring keeps the full folk polygon") {
  auto g = make_prisoners_dilemma();
  auto ms = MonitoringStructure::perfect(g);
  auto set = limit_set_pure(g, ms);
  REQUIRE_FALSE(set.empty);
  auto v = sorted_vertices(set);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == RationalVector{Rational(0), Rational(0)});
  CHECK(v[1] == RationalVector{Rational(0), Rational(8, 3)});
  CHECK(v[2] == RationalVector{Rational(2), Rational(2)});
  CHECK(v[3] == RationalVector{Rational(8, 3), Rational(0)});
}

TEST_CASE("limit sets of a single-profile game collapse to its payoff") {
  StageGame g({{"A"}, {"A"}}, {RationalVector{Rational(1), Rational(2)}});
  auto ms = MonitoringStructure::make_public({1, 1}, {"o"},
                                             RationalMatrix{{Rational(1)}});
  auto pure = limit_set_pure(g, ms);
  REQUIRE(pure.vertices.size() == 1);
  CHECK(std::abs(to_double(pure.vertices[0][0]) - 1.0) <= 1e-9);
  CHECK(std::abs(to_double(pure.vertices[0][1]) - 2.0) <= 1e-9);
  auto mixed = limit_set_mixed(g, ms);
  REQUIRE(mixed.vertices.size() == 1);
  CHECK(std::abs(to_double(mixed.vertices[0][0]) - 1.0) <= 1e-9);
  CHECK(std::abs(to_double(mixed.vertices[0][1]) - 2.0) <= 1e-9);
}

TEST_CASE("uninformative monitoring strands matching pennies at its equilibrium") {
  StageGame g({{"H", "T"}, {"H", "T"}},
              {{Rational(1), Rational(-1)},
               {Rational(-1), Rational(1)},
               {Rational(-1), Rational(1)},
               {Rational(1), Rational(-1)}});
  auto ms = MonitoringStructure::make_public(
      {2, 2}, {"o"},
      RationalMatrix(4, RationalVector{Rational(1)}));
  // No pure profile is enforceable: someone always gains and nothing is seen.
  auto pure = limit_set_pure(g, ms);
  CHECK(pure.empty);
  // The mixed sweep keeps only the stage equilibrium value.
  auto mixed = limit_set_mixed(g, ms);
  REQUIRE_FALSE(mixed.empty);
  for (const auto& v : mixed.vertices) {
    CHECK(std::abs(to_double(v[0])) <= 1e-6);
    CHECK(std::abs(to_double(v[1])) <= 1e-6);
  }
}

TEST_CASE("mixed limit set of the noisy prisoners dilemma reaches the known corners") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  auto set = limit_set_mixed(g, ms);
  REQUIRE_FALSE(set.empty);
  const double s = (7.0 - std::sqrt(15.0)) / 3.0;
  const double ax = (98.0 - 14.0 * std::sqrt(15.0)) / (36.0 - 3.0 * std::sqrt(15.0));
  const double ay = (14.0 - 2.0 * std::sqrt(15.0)) / (36.0 - 3.0 * std::sqrt(15.0));
  CHECK(has_vertex_near(set, 0.0, 0.0, 1e-6));
  CHECK(has_vertex_near(set, s, s, 1e-3));
  CHECK(has_vertex_near(set, ax, ay, 1e-3));
  CHECK(has_vertex_near(set, ay, ax, 1e-3));
  // The sweep reproduces the symmetric corner far tighter than required.
  CHECK(has_vertex_near(set, s, s, 1e-6));
}

TEST_CASE("indifference minmax through own signals, prisoners dilemma") {
  auto g = make_prisoners_dilemma();
  auto ms = MonitoringStructure::perfect_product(g);
  for (int i = 0; i < 2; ++i) {
    auto r = mi_prd_minmax(g, ms, i);
    REQUIRE(r.exact_value.has_value());
    CHECK(*r.exact_value == Rational(0));
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("indifference minmax separates from the pure benchmark") {
  auto g = make_minmax_separation_game();
  auto ms = MonitoringStructure::perfect_product(g);
  auto r0 = mi_prd_minmax(g, ms, 0);
  REQUIRE(r0.exact_value.has_value());
  CHECK(*r0.exact_value == Rational(3, 4));
  auto r1 = mi_prd_minmax(g, ms, 1);
  REQUIRE(r1.exact_value.has_value());
  CHECK(*r1.exact_value == Rational(1));
}

TEST_CASE("indifference minmax rejects monitoring without product form") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  CHECK_THROWS_WITH_AS(mi_prd_minmax(g, ms, 0),
                       doctest::Contains("mi_score"), DomainError);
}

TEST_CASE("indifference-constrained direction scores") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  // All pure profiles are trivially indifferent, so the joint-value score
  // matches the unconstrained one.
  auto up = mi_score(g, ms, {kInvSqrt2, kInvSqrt2});
  REQUIRE(up.feasible);
  CHECK(up.score == doctest::Approx(2.0 * kInvSqrt2).epsilon(1e-9));
  auto down = mi_score(g, ms, {-1.0, 0.0});
  REQUIRE(down.feasible);
  CHECK(std::abs(down.score) <= 1e-9);
}

TEST_CASE("direction score of a single-action game is its payoff component") {
  StageGame g({{"A"}, {"A"}}, {RationalVector{Rational(1), Rational(2)}});
  auto ms = MonitoringStructure::make_public({1, 1}, {"o"},
                                             RationalMatrix{{Rational(1)}});
  auto r = mi_score(g, ms, {1.0, 0.0});
  REQUIRE(r.feasible);
  CHECK(r.score == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("score and minmax agree across random product-monitored games") {
  // In the direction that lowers player i alone, the best indifference-
  // compatible score is the negative of that player's indifference minmax.
  std::mt19937 rng(20260819);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_product_game(rng);
    auto ms = random_product_monitoring(rng);
    for (int i = 0; i < 2; ++i) {
      std::vector<double> dir = {0.0, 0.0};
      dir[i] = -1.0;
      auto sc = mi_score(g, ms, dir);
      auto mm = mi_prd_minmax(g, ms, i);
      REQUIRE(sc.feasible);
      CHECK(std::abs(sc.score + mm.value) <= 1e-7);
    }
  }
}

TEST_CASE("feasible payoffs cut by the two punishment floors") {
  auto g = make_minmax_separation_game();
  auto ms = MonitoringStructure::perfect_product(g);
  auto bs = bounded_sets(g, ms);
  REQUIRE(bs.f_star_floors.size() == 2);
  CHECK(bs.f_star_floors[0] == Rational(1));
  CHECK(bs.f_star_floors[1] == Rational(1));
  CHECK(bs.f_star_exact);
  REQUIRE(bs.f_mi_floors.size() == 2);
  CHECK(bs.f_mi_floors[0] == Rational(3, 4));
  CHECK(bs.f_mi_floors[1] == Rational(1));
  // The column player's two zero-payoff columns form indifference continua,
  // so the floor is reported as sampled rather than proven.
  CHECK_FALSE(bs.f_mi_exact);
  REQUIRE_FALSE(bs.f_star.empty);
  REQUIRE_FALSE(bs.f_mi.empty);
  // The indifference floor is genuinely lower for the row player, so its
  // cut keeps everything the pure floor keeps.
  CHECK(polytope_contains(bs.f_mi, RationalVector{Rational(1), Rational(1)}));
  CHECK(polytope_contains(bs.f_mi, RationalVector{Rational(3, 4), Rational(1)}));
  CHECK_FALSE(polytope_contains(bs.f_star, RationalVector{Rational(3, 4), Rational(1)}));
}

TEST_CASE("punishment floors fall back to stage indifference off product form") {
  auto g = make_prisoners_dilemma();
  auto ms = pd_public_monitoring();
  auto bs = bounded_sets(g, ms);
  CHECK(bs.note.find("product") != std::string::npos);
  auto mi = minmax(g, MinmaxNotion::MyopicIndifferent);
  REQUIRE(bs.f_mi_floors.size() == 2);
  CHECK(bs.f_mi_floors[0] == mi.values[0]);
  CHECK(bs.f_mi_floors[1] == mi.values[1]);
}

TEST_SUITE_END();
