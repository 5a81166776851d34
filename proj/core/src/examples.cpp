#include "blackwell/examples.hpp"

namespace blackwell {

StageGame make_prisoners_dilemma() {
  return StageGame({{"C", "D"}, {"C", "D"}},
                   {{Rational(2), Rational(2)},
                    {Rational(-1), Rational(3)},
                    {Rational(3), Rational(-1)},
                    {Rational(0), Rational(0)}});
}

MonitoringStructure pd_public_monitoring() {
  return MonitoringStructure::make_public(
      {2, 2}, {"good", "bad"},
      {{Rational(9, 10), Rational(1, 10)},
       {Rational(8, 10), Rational(2, 10)},
       {Rational(8, 10), Rational(2, 10)},
       {Rational(1, 10), Rational(9, 10)}});
}

namespace {

// Player i's signal tracks the opponent's action with accuracy 9/10.
// Profiles are ordered CC, CD, DC, DD (player 0 major); signal c means
// "looked like C".
MonitoringStructure opponent_tracking_private(std::vector<std::string> names) {
  const Rational hit(9, 10), miss(1, 10);
  RationalMatrix watch_p2 = {// rows per profile: what player 1 sees
                             {hit, miss},
                             {miss, hit},
                             {hit, miss},
                             {miss, hit}};
  RationalMatrix watch_p1 = {// what player 2 sees
                             {hit, miss},
                             {hit, miss},
                             {miss, hit},
                             {miss, hit}};
  return MonitoringStructure::make_private(
      {2, 2}, {names, names}, {std::move(watch_p2), std::move(watch_p1)});
}

}  // namespace

MonitoringStructure pd_private_monitoring() {
  return opponent_tracking_private({"c", "d"});
}

StageGame make_minmax_separation_game() {
  return StageGame({{"T", "B"}, {"L", "M", "R"}},
                   {{Rational(1), Rational(0)},
                    {Rational(0), Rational(0)},
                    {Rational(0), Rational(3)},
                    {Rational(0), Rational(0)},
                    {Rational(3), Rational(0)},
                    {Rational(1), Rational(1)}});
}

StageGame make_hawk_dove() {
  return StageGame({{"H", "D"}, {"H", "D"}},
                   {{Rational(0), Rational(0)},
                    {Rational(5), Rational(1)},
                    {Rational(1), Rational(5)},
                    {Rational(4), Rational(4)}});
}

MonitoringStructure hawk_dove_private_monitoring() {
  // Signal h means "looked like H"; accuracy 9/10 on the opponent's action.
  return opponent_tracking_private({"h", "d"});
}

}  // namespace blackwell
