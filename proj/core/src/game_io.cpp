#include "blackwell/game_io.hpp"

#include <cmath>
#include <limits>

#include "blackwell/errors.hpp"

namespace blackwell {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(BigInt(j.get<unsigned long long>()));
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw InputError("expected a number or rational string, got: " + j.dump());
}

Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) {
    BigInt num = numerator(r);
    if (num >= BigInt(std::numeric_limits<long long>::min()) &&
        num <= BigInt(std::numeric_limits<long long>::max())) {
      return Json(num.convert_to<long long>());
    }
  }
  return Json(rational_to_string(r));
}

namespace {

void flatten_payoffs(const Json& node, const std::vector<int>& counts,
                     std::size_t player_depth, int num_players,
                     std::vector<RationalVector>& out) {
  if (player_depth == counts.size()) {
    BW_REQUIRE(node.is_array() && static_cast<int>(node.size()) == num_players,
               "payoff leaf must list one value per player");
    RationalVector leaf;
    for (const auto& v : node) leaf.push_back(rational_from_json(v));
    out.push_back(std::move(leaf));
    return;
  }
  BW_REQUIRE(node.is_array() &&
                 node.size() == static_cast<std::size_t>(counts[player_depth]),
             "payoff nesting must follow the action counts");
  for (const auto& child : node) {
    flatten_payoffs(child, counts, player_depth + 1, num_players, out);
  }
}

RationalMatrix parse_kernel(const Json& rows, std::size_t expect_rows,
                            std::size_t expect_cols, const std::string& what) {
  BW_REQUIRE(rows.is_array() && rows.size() == expect_rows,
             what + ": wrong number of rows");
  RationalMatrix m;
  for (const auto& row : rows) {
    BW_REQUIRE(row.is_array() && row.size() == expect_cols,
               what + ": wrong row width");
    RationalVector r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

Json kernel_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

MonitoringStructure parse_monitoring(const Json& j, const StageGame& game) {
  BW_REQUIRE(j.is_object() && j.contains("kind"), "monitoring needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  std::vector<int> counts;
  for (int i = 0; i < game.num_players(); ++i) counts.push_back(game.num_actions(i));

  if (kind == "public") {
    BW_REQUIRE(j.contains("signals") && j.contains("pi"),
               "public monitoring needs signals and pi");
    std::vector<std::string> names =
        j.at("signals").get<std::vector<std::string>>();
    auto pi = parse_kernel(j.at("pi"), game.num_profiles(), names.size(),
                           "public kernel");
    return MonitoringStructure::make_public(counts, std::move(names),
                                            std::move(pi));
  }

  BW_REQUIRE(kind == "public_product" || kind == "private",
             "unknown monitoring kind: " + kind);
  BW_REQUIRE(j.contains("factors") && j.at("factors").is_array() &&
                 static_cast<int>(j.at("factors").size()) == game.num_players(),
             "factored monitoring needs one factor block per player");
  std::vector<std::vector<std::string>> names;
  std::vector<RationalMatrix> factors;
  for (int i = 0; i < game.num_players(); ++i) {
    const Json& f = j.at("factors")[i];
    BW_REQUIRE(f.is_object() && f.contains("signals") && f.contains("pi"),
               "factor block needs signals and pi");
    names.push_back(f.at("signals").get<std::vector<std::string>>());
    std::size_t rows = kind == "public_product"
                           ? static_cast<std::size_t>(game.num_actions(i))
                           : game.num_profiles();
    factors.push_back(
        parse_kernel(f.at("pi"), rows, names.back().size(), "factor kernel"));
  }
  if (kind == "public_product") {
    return MonitoringStructure::make_public_product(counts, std::move(names),
                                                    std::move(factors));
  }
  return MonitoringStructure::make_private(counts, std::move(names),
                                           std::move(factors));
}

Json monitoring_to_json(const MonitoringStructure& ms) {
  Json j = Json::object();
  switch (ms.kind) {
    case MonitoringKind::Public: {
      j["kind"] = "public";
      j["signals"] = ms.joint_names;
      j["pi"] = kernel_to_json(ms.pi_joint);
      break;
    }
    case MonitoringKind::PublicProduct:
    case MonitoringKind::Private: {
      j["kind"] = ms.kind == MonitoringKind::Private ? "private" : "public_product";
      Json fs = Json::array();
      for (std::size_t i = 0; i < ms.factors.size(); ++i) {
        Json f = Json::object();
        f["signals"] = ms.factor_names[i];
        f["pi"] = kernel_to_json(ms.factors[i]);
        fs.push_back(std::move(f));
      }
      j["factors"] = std::move(fs);
      break;
    }
  }
  return j;
}

}  // namespace

GameBundle parse_game(const Json& j) {
  BW_REQUIRE(j.is_object(), "game description must be a JSON object");
  BW_REQUIRE(j.contains("actions") && j.at("actions").is_array(),
             "game needs an actions array");
  GameBundle bundle;
  if (j.contains("name")) bundle.name = j.at("name").get<std::string>();

  std::vector<std::vector<std::string>> action_names;
  std::vector<int> counts;
  for (const auto& player_actions : j.at("actions")) {
    BW_REQUIRE(player_actions.is_array() && !player_actions.empty(),
               "each player needs a nonempty action list");
    action_names.push_back(player_actions.get<std::vector<std::string>>());
    counts.push_back(static_cast<int>(action_names.back().size()));
  }
  BW_REQUIRE(counts.size() >= 2, "need at least two players");

  BW_REQUIRE(j.contains("payoffs"), "game needs payoffs");
  std::vector<RationalVector> payoffs;
  flatten_payoffs(j.at("payoffs"), counts, 0,
                  static_cast<int>(counts.size()), payoffs);
  bundle.game = StageGame(std::move(action_names), std::move(payoffs));

  if (j.contains("monitoring") && !j.at("monitoring").is_null()) {
    bundle.monitoring = parse_monitoring(j.at("monitoring"), bundle.game);
  }
  return bundle;
}

GameBundle load_game(const std::string& path) {
  return parse_game(read_json_file(path));
}

namespace {

Json payoffs_to_json(const StageGame& game, std::vector<int>& prefix) {
  int depth = static_cast<int>(prefix.size());
  Json arr = Json::array();
  if (depth == game.num_players() - 1) {
    for (int a = 0; a < game.num_actions(depth); ++a) {
      prefix.push_back(a);
      std::size_t idx = game.profile_index(prefix);
      prefix.pop_back();
      Json leaf = Json::array();
      for (int i = 0; i < game.num_players(); ++i) {
        leaf.push_back(rational_to_json(game.payoff(idx, i)));
      }
      arr.push_back(std::move(leaf));
    }
    return arr;
  }
  for (int a = 0; a < game.num_actions(depth); ++a) {
    prefix.push_back(a);
    arr.push_back(payoffs_to_json(game, prefix));
    prefix.pop_back();
  }
  return arr;
}

}  // namespace

Json game_to_json(const GameBundle& bundle) {
  Json j = Json::object();
  if (!bundle.name.empty()) j["name"] = bundle.name;
  j["actions"] = bundle.game.action_names();
  std::vector<int> prefix;
  j["payoffs"] = payoffs_to_json(bundle.game, prefix);
  if (bundle.monitoring) {
    j["monitoring"] = monitoring_to_json(*bundle.monitoring);
  }
  return j;
}

void save_game(const std::string& path, const GameBundle& bundle) {
  write_json_file(path, game_to_json(bundle));
}

}  // namespace blackwell
