#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blackwell/game.hpp"
#include "blackwell/geometry.hpp"
#include "blackwell/monitoring.hpp"
#include "blackwell/rational.hpp"

namespace blackwell {

// Signal-contingent continuation adjustments enforcing a profile: the profile
// is a Nash equilibrium of the augmented game u + E[x | .], and `value` is
// its augmented payoff vector.
struct EnforcementScheme {
  MixedProfile profile;
  std::vector<std::vector<double>> transfers;  // [joint signal][player]
  std::vector<double> value;
};

// One direction of the scoring program.
struct ScoreResult {
  std::vector<double> direction;
  double score = 0.0;   // meaningful only when feasible
  bool feasible = false;
  bool exact = true;    // false when a profile continuum was only sampled
  std::string note;
  EnforcementScheme witness;  // populated when feasible
};

// Best payoff in direction `direction` enforceable at `profile`: maximizes
// direction . v over augmented payoffs v = g(profile) + E[x] such that the
// profile is a Nash equilibrium of the augmented game (equal augmented
// payoffs across own support, no profitable deviation off support) and every
// transfer vector lies weakly on the far side of the direction,
// direction . x(y) <= 0. Public signal kinds only.
ScoreResult fl_score(const StageGame& game, const MonitoringStructure& ms,
                     const std::vector<double>& direction,
                     const MixedProfile& profile);

struct LimitSetOptions {
  int directions = 720;        // base fan for the pure-profile sweep
  int mixed_directions = 360;  // base fan for the mixed sweep
  int mixed_grid = 24;         // per-coordinate mixture grid; a local zoom sharpens the argmax
  double tol = 1e-9;           // kink refinement trigger, pure sweep
  double mixed_tol = 1e-5;     // kink refinement trigger, mixed sweep
  double point_snap = 1e-7;    // vertex and facet dedup scale
  int max_rounds = 60;         // cap on kink-refinement splits per direction gap
};

// Payoffs supportable when continuation promises must keep enforcing the
// same play as the discount factor varies, pure-profile version. Every
// circle direction contributes a bounding halfspace. In a direction that
// raises one player while lowering the other, promises may only move value
// along the direction's level line (trading surplus against such a
// direction does not survive discount perturbations), and each deviation
// with a real stage gain must stay deterred with strict room; profiles that
// cannot meet that drop out and the bound falls to the best remaining one.
// In directions weighting both players the same way, promises may also burn
// surplus signal by signal, backed by reversion to the worst enforceable
// continuation. Halfspaces are intersected exactly; with two joint signals
// the directions where enforceability flips are enumerated in closed form,
// so polygon vertices come out exact. Two-player games, public kinds.
PayoffPolytope limit_set_pure(const StageGame& game, const MonitoringStructure& ms,
                              const LimitSetOptions& options = {});

// Same sweep over independently mixed profiles. Mixture space is scanned on
// a grid and sharpened locally around each direction's best point, so the
// boundary is exact only up to the grid and refinement accuracy.
PayoffPolytope limit_set_mixed(const StageGame& game, const MonitoringStructure& ms,
                               const LimitSetOptions& options = {});

// Worst payoff opponents can impose on `player` with myopically indifferent
// play policed through the player's own signal coordinate: minimizes
// g_player + E[x] over indifferent profiles, with nonnegative own-signal
// transfers x deterring every stage deviation.
struct MiMinmaxResult {
  int player = 0;
  double value = 0.0;
  // Best candidate value, exact. A true upper bound on the infimum; equals
  // it when `exact` is set.
  std::optional<Rational> exact_value;
  MixedProfile witness;
  std::vector<double> transfers;  // own-signal transfers at the witness
  bool exact = true;              // false when profile continua were sampled
  std::string note;
};
// Requires monitoring in which each player's signal coordinate depends only
// on the own action (product form); otherwise throws DomainError.
MiMinmaxResult mi_prd_minmax(const StageGame& game, const MonitoringStructure& ms,
                             int player);

// Max of the per-profile score over the myopically indifferent profiles.
ScoreResult mi_score(const StageGame& game, const MonitoringStructure& ms,
                     const std::vector<double>& direction);

// Feasible payoffs cut from below by two punishment benchmarks.
struct BoundedSets {
  PayoffPolytope f_star;  // floors: min(pure minmax, worst stage equilibrium)
  PayoffPolytope f_mi;    // floors: indifference-based minmax under the monitoring
  RationalVector f_star_floors;
  RationalVector f_mi_floors;
  bool f_star_exact = true;
  bool f_mi_exact = true;
  std::string note;
};
BoundedSets bounded_sets(const StageGame& game, const MonitoringStructure& ms);

}  // namespace blackwell
