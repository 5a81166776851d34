#include "doctest.h"

#include <random>

#include "blackwell/equilibria.hpp"
#include "blackwell/examples.hpp"

using namespace blackwell;

namespace {

StageGame random_game(std::mt19937& rng, int na0, int na1) {
  std::uniform_int_distribution<int> pay(-4, 4);
  std::vector<std::vector<std::string>> names(2);
  for (int a = 0; a < na0; ++a) names[0].push_back("a" + std::to_string(a));
  for (int b = 0; b < na1; ++b) names[1].push_back("b" + std::to_string(b));
  std::vector<RationalVector> payoffs;
  for (int p = 0; p < na0 * na1; ++p) {
    payoffs.push_back({Rational(pay(rng)), Rational(pay(rng))});
  }
  return StageGame(std::move(names), std::move(payoffs));
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("prisoners dilemma has the lone defection equilibrium") {
  auto g = make_prisoners_dilemma();
  auto nash = enumerate_stage_nash(g);
  REQUIRE(nash.equilibria.size() == 1);
  CHECK_FALSE(nash.degenerate);
  CHECK(nash.equilibria[0].pure_actions() == std::vector<int>{1, 1});
  CHECK(nash.payoffs[0][0] == Rational(0));
}

TEST_CASE("hawk dove has two pure and one mixed equilibrium") {
  auto g = make_hawk_dove();
  auto nash = enumerate_stage_nash(g);
  REQUIRE(nash.equilibria.size() == 3);
  CHECK_FALSE(nash.degenerate);
  int pure_count = 0;
  bool found_mixed = false;
  for (const auto& e : nash.equilibria) {
    if (e.is_pure()) {
      ++pure_count;
    } else {
      found_mixed = true;
      CHECK(e.actions[0].weights[0] == Rational(1, 2));
      CHECK(e.actions[1].weights[0] == Rational(1, 2));
    }
  }
  CHECK(pure_count == 2);
  CHECK(found_mixed);
}

TEST_CASE("a game of pure coordination reports its equilibrium continuum") {
  // Both players always get 1: every profile is an equilibrium.
  StageGame g({{"a", "b"}, {"x", "y"}},
              {{Rational(1), Rational(1)},
               {Rational(1), Rational(1)},
               {Rational(1), Rational(1)},
               {Rational(1), Rational(1)}});
  auto nash = enumerate_stage_nash(g);
  CHECK(nash.degenerate);
  CHECK_FALSE(nash.degenerate_supports.empty());
  for (const auto& rep : nash.degenerate_representatives) {
    CHECK(is_stage_nash(g, rep));
  }
}

TEST_CASE("indifference families of the separation game") {
  auto g = make_minmax_separation_game();
  auto mi = enumerate_mi_profiles(g);
  CHECK(mi.complete);
  // Isolated profiles: exactly the six pure ones.
  CHECK(mi.members.size() == 6);
  for (const auto& m : mi.members) {
    CHECK(m.is_pure());
    CHECK(is_myopically_indifferent(g, m));
  }
  // Families: the column player pinned at (3/4, 1/4, 0) with the row player
  // free, and the row-pure families with the column player free over {L, M}.
  REQUIRE(mi.cells.size() == 3);
  int pinned_column = 0;
  for (const auto& cell : mi.cells) {
    CHECK(is_myopically_indifferent(g, cell.representative));
    if (cell.support.supports[0] == std::vector<int>{0, 1}) {
      ++pinned_column;
      CHECK(cell.support.supports[1] == std::vector<int>{0, 1});
      CHECK(cell.factors[1].dim == 0);
      CHECK(cell.factors[1].point == RationalVector{Rational(3, 4), Rational(1, 4)});
      CHECK(cell.factors[0].dim == 1);
    }
  }
  CHECK(pinned_column == 1);
}

TEST_CASE("four punishment benchmarks of the separation game") {
  auto g = make_minmax_separation_game();
  auto rep = minmax_report(g);
  CHECK(rep.standard.values[0] == Rational(1, 2));
  CHECK(rep.myopic.values[0] == Rational(3, 4));
  CHECK(rep.pure.values[0] == Rational(1));
  CHECK(rep.nash_worst.values[0] == Rational(1));
  CHECK(rep.standard.exact);
  CHECK(rep.myopic.exact);
  // Witness for the indifference notion: the pinned column mixture.
  const auto& w = rep.myopic.witnesses[0];
  CHECK(w.actions[1].weights == RationalVector{Rational(3, 4), Rational(1, 4), Rational(0)});
}

TEST_CASE("hawk dove punishment benchmarks") {
  auto g = make_hawk_dove();
  auto rep = minmax_report(g);
  for (int i = 0; i < 2; ++i) {
    CHECK(rep.standard.values[i] == Rational(1));
    CHECK(rep.pure.values[i] == Rational(1));
    CHECK(rep.nash_worst.values[i] == Rational(1));
    CHECK(rep.myopic.values[i] == Rational(1));
  }
}

TEST_CASE("prisoners dilemma punishment benchmarks all agree at zero") {
  auto g = make_prisoners_dilemma();
  auto rep = minmax_report(g);
  for (int i = 0; i < 2; ++i) {
    CHECK(rep.standard.values[i] == Rational(0));
    CHECK(rep.pure.values[i] == Rational(0));
    CHECK(rep.nash_worst.values[i] == Rational(0));
    CHECK(rep.myopic.values[i] == Rational(0));
  }
  // Every action profile in the dilemma is myopically indifferent (all
  // supports are singletons), the premise behind its uniqueness verdicts.
  auto mi = enumerate_mi_profiles(g);
  CHECK(mi.equals_all_pure(g));
}

TEST_CASE("random games: enumerated profiles verify and benchmarks order") {
  std::mt19937 rng(77001);
  std::uniform_int_distribution<int> size(2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    StageGame g = random_game(rng, size(rng), size(rng));
    auto mi = enumerate_mi_profiles(g);
    for (const auto& m : mi.members) {
      CHECK(is_myopically_indifferent(g, m));
    }
    for (const auto& c : mi.cells) {
      CHECK(is_myopically_indifferent(g, c.representative));
    }
    auto nash = enumerate_stage_nash(g);
    for (const auto& e : nash.equilibria) {
      CHECK(is_stage_nash(g, e));
    }
    for (const auto& r : nash.degenerate_representatives) {
      CHECK(is_stage_nash(g, r));
    }
    if (nash.equilibria.empty() && !nash.degenerate) continue;
    auto rep = minmax_report(g);
    for (int i = 0; i < 2; ++i) {
      CHECK(rep.standard.values[i] <= rep.myopic.values[i]);
      CHECK(rep.myopic.values[i] <= rep.pure.values[i]);
      if (rep.nash_worst.exact) {
        CHECK(rep.myopic.values[i] <= rep.nash_worst.values[i]);
      }
    }
  }
}

TEST_CASE("three player pure analysis stays honest about completeness") {
  // Matching-pennies-like 2x2x2 game with no pure equilibrium.
  std::vector<RationalVector> payoffs;
  for (int p = 0; p < 8; ++p) {
    int a = (p >> 2) & 1, b = (p >> 1) & 1, c = p & 1;
    Rational v = (a == b) ? Rational(1) : Rational(-1);
    Rational w = (b == c) ? Rational(1) : Rational(-1);
    payoffs.push_back({v, Rational(-1) * v + w, Rational(-1) * w});
  }
  StageGame g({{"a0", "a1"}, {"b0", "b1"}, {"c0", "c1"}}, std::move(payoffs));
  auto nash = enumerate_stage_nash(g);
  CHECK_FALSE(nash.complete);
  auto mi = enumerate_mi_profiles(g);
  CHECK_FALSE(mi.complete);
  CHECK(mi.members.size() == 8);
  auto pure = minmax(g, MinmaxNotion::Pure);
  CHECK(pure.values.size() == 3);
  auto standard = minmax(g, MinmaxNotion::Standard);
  CHECK_FALSE(standard.exact);
  for (int i = 0; i < 3; ++i) {
    CHECK(standard.values_d[i] <= to_double(pure.values[i]) + 1e-9);
  }
}

TEST_SUITE_END();
