#pragma once

#include "blackwell/game.hpp"
#include "blackwell/monitoring.hpp"

namespace blackwell {

// Bundled example games used by the regression suite and the `reproduce`
// command. Fixtures under data/ mirror these; a test pins the equivalence.

// C,C -> (2,2); C,D -> (-1,3); D,C -> (3,-1); D,D -> (0,0).
StageGame make_prisoners_dilemma();

// Public signal {good, bad} with P(good) = 9/10 after C,C; 8/10 after one
// defection; 1/10 after D,D.
MonitoringStructure pd_public_monitoring();

// Private per-player signal of the opponent's action, 9/10 accurate,
// conditionally independent across players.
MonitoringStructure pd_private_monitoring();

// 2x3 game whose four punishment benchmarks all differ:
//   T: (1,0) (0,0) (0,3)
//   B: (0,0) (3,0) (1,1)
// Worst payoffs for player 1: randomized 1/2, indifference-based 3/4,
// pure-action 1, worst-equilibrium 1.
StageGame make_minmax_separation_game();

// H,H -> (0,0); H,D -> (5,1); D,H -> (1,5); D,D -> (4,4).
StageGame make_hawk_dove();

// Same 9/10-accurate conditionally independent private signals, attached to
// the hawk-dove action space.
MonitoringStructure hawk_dove_private_monitoring();

}  // namespace blackwell
