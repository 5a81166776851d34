#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blackwell/game.hpp"
#include "blackwell/rational.hpp"

namespace blackwell {

// Stage-game Nash enumeration. For two players this is exact support
// enumeration over rational payoffs; continua are reported, never silently
// collapsed to a sample. With three or more players only pure equilibria are
// enumerated and `complete` is false.
struct NashEnumeration {
  std::vector<MixedProfile> equilibria;   // isolated equilibria
  std::vector<RationalVector> payoffs;    // parallel to `equilibria`
  bool degenerate = false;                // some support carries a continuum
  std::vector<SupportProfile> degenerate_supports;
  std::vector<MixedProfile> degenerate_representatives;
  bool complete = true;
  std::string note;
};
NashEnumeration enumerate_stage_nash(const StageGame& game);

// Is the profile a stage Nash equilibrium? Exact.
bool is_stage_nash(const StageGame& game, const MixedProfile& profile);
// Is every player indifferent across own support (nothing asked off
// support)? Exact. Pure profiles pass vacuously.
bool is_myopically_indifferent(const StageGame& game, const MixedProfile& profile);

// One player's mixtures inside a family of indifference-compatible profiles:
// the polytope {w in simplex(support) : rows w = rhs}, stored over support
// coordinates. dim is the affine dimension; vertices are enumerated when
// dim <= 1.
struct MiCellFactor {
  int player = 0;
  std::vector<int> support;
  RationalMatrix rows;
  RationalVector rhs;
  int dim = 0;
  RationalVector point;                  // valid when dim == 0
  std::vector<RationalVector> vertices;  // support coordinates; dim <= 1 only
};

// A positive-dimensional family of profiles, one factor per player. The
// family is the product of the factors (players' constraints decouple for
// two players because each indifference system binds the opponent).
struct MiCell {
  SupportProfile support;
  std::vector<MiCellFactor> factors;
  MixedProfile representative;  // relative interior of every factor
  int dim() const;
};

struct MiProfileSet {
  std::vector<MixedProfile> members;  // isolated profiles (all pure ones appear)
  std::vector<MiCell> cells;
  bool complete = true;  // false when supports had to be skipped
  std::string note;
  bool finite() const { return cells.empty(); }
  // True when every action profile is myopically indifferent, i.e. the set
  // exhausts the pure profiles and nothing else.
  bool equals_all_pure(const StageGame& game) const;
};
MiProfileSet enumerate_mi_profiles(const StageGame& game);

enum class MinmaxNotion { Standard, Pure, NashWorst, MyopicIndifferent };

struct MinmaxResult {
  MinmaxNotion notion;
  std::vector<Rational> values;
  std::vector<double> values_d;
  // Witness per player: the opponents' play attaining the value, with the
  // punished player's component set to a best response.
  std::vector<MixedProfile> witnesses;
  bool exact = true;
  std::string note;
};
MinmaxResult minmax(const StageGame& game, MinmaxNotion notion);

// All four notions at once, plus the ordering sanity flags.
struct MinmaxReport {
  MinmaxResult standard, pure, nash_worst, myopic;
};
MinmaxReport minmax_report(const StageGame& game);

}  // namespace blackwell
