#pragma once

#include <optional>
#include <string>

#include "blackwell/game.hpp"
#include "blackwell/json_fixed.hpp"
#include "blackwell/monitoring.hpp"

namespace blackwell {

// On-disk game description:
// {
//   "name": "...",                         (optional)
//   "actions": [["C","D"], ["C","D"]],
//   "payoffs": [[[2,2], ["-1","3"]], ...]  nested by action indices,
//                                          leaves are per-player payoffs,
//   "monitoring": { ... }                  (optional)
// }
// Numeric entries: JSON integers are taken exactly; strings may hold
// integers, fractions "p/q", or decimals. Non-integer JSON numbers pass
// through binary doubles, so exact decimal inputs should be quoted.
//
// Monitoring block, by "kind":
//   "public":         {"kind","signals":[...],"pi":[[...] per profile]}
//   "public_product": {"kind","factors":[{"signals":[...],"pi":[[...] per own
//                      action]} per player]}
//   "private":        same shape as public_product, rows per full profile
struct GameBundle {
  std::string name;
  StageGame game;
  std::optional<MonitoringStructure> monitoring;
};

GameBundle parse_game(const Json& j);
GameBundle load_game(const std::string& path);

Json game_to_json(const GameBundle& bundle);
void save_game(const std::string& path, const GameBundle& bundle);

// Canonical JSON value for an exact rational: a plain integer when it fits,
// otherwise a "p/q" string.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

}  // namespace blackwell
