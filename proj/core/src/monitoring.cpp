#include "blackwell/monitoring.hpp"

#include <algorithm>

#include "blackwell/errors.hpp"
#include "blackwell/linalg.hpp"

namespace blackwell {

namespace {

void require_distribution_rows(const RationalMatrix& m, const std::string& what) {
  for (const auto& row : m) {
    Rational sum(0);
    for (const auto& p : row) {
      BW_REQUIRE(p >= 0, what + ": negative probability");
      sum += p;
    }
    BW_REQUIRE(sum == 1, what + ": row does not sum to 1");
  }
}

std::size_t count_profiles(const std::vector<int>& action_counts) {
  std::size_t n = 1;
  for (int c : action_counts) {
    BW_REQUIRE(c >= 1, "player needs at least one action");
    n *= static_cast<std::size_t>(c);
  }
  return n;
}

}  // namespace

std::size_t MonitoringStructure::num_profiles() const {
  return count_profiles(action_counts);
}

int MonitoringStructure::profile_component(std::size_t profile, int player) const {
  int n = static_cast<int>(action_counts.size());
  for (int i = n - 1; i > player; --i) {
    profile /= static_cast<std::size_t>(action_counts[i]);
  }
  return static_cast<int>(profile % static_cast<std::size_t>(action_counts[player]));
}

MonitoringStructure MonitoringStructure::make_public(
    std::vector<int> action_counts, std::vector<std::string> signal_names,
    RationalMatrix pi) {
  MonitoringStructure ms;
  ms.kind = MonitoringKind::Public;
  ms.action_counts = std::move(action_counts);
  ms.joint_names = std::move(signal_names);
  ms.pi_joint = std::move(pi);
  BW_REQUIRE(!ms.joint_names.empty(), "need at least one signal");
  BW_REQUIRE(ms.pi_joint.size() == ms.num_profiles(),
             "public kernel needs one row per action profile");
  for (const auto& row : ms.pi_joint) {
    BW_REQUIRE(row.size() == ms.joint_names.size(),
               "public kernel row width mismatch");
  }
  require_distribution_rows(ms.pi_joint, "public kernel");
  ms.build_doubles();
  return ms;
}

MonitoringStructure MonitoringStructure::make_public_product(
    std::vector<int> action_counts,
    std::vector<std::vector<std::string>> factor_names,
    std::vector<RationalMatrix> factors) {
  MonitoringStructure ms;
  ms.kind = MonitoringKind::PublicProduct;
  ms.action_counts = std::move(action_counts);
  ms.factor_names = std::move(factor_names);
  ms.factors = std::move(factors);
  BW_REQUIRE(ms.factor_names.size() == ms.action_counts.size() &&
                 ms.factors.size() == ms.action_counts.size(),
             "one factor kernel per player expected");
  for (std::size_t i = 0; i < ms.factors.size(); ++i) {
    BW_REQUIRE(!ms.factor_names[i].empty(), "empty signal space for a player");
    BW_REQUIRE(ms.factors[i].size() ==
                   static_cast<std::size_t>(ms.action_counts[i]),
               "own-action factor needs one row per own action");
    for (const auto& row : ms.factors[i]) {
      BW_REQUIRE(row.size() == ms.factor_names[i].size(),
                 "factor kernel row width mismatch");
    }
    require_distribution_rows(ms.factors[i], "factor kernel");
  }
  ms.build_joint_from_factors();
  ms.build_doubles();
  return ms;
}

MonitoringStructure MonitoringStructure::make_private(
    std::vector<int> action_counts,
    std::vector<std::vector<std::string>> factor_names,
    std::vector<RationalMatrix> factors) {
  MonitoringStructure ms;
  ms.kind = MonitoringKind::Private;
  ms.action_counts = std::move(action_counts);
  ms.factor_names = std::move(factor_names);
  ms.factors = std::move(factors);
  std::size_t profiles = ms.num_profiles();
  BW_REQUIRE(ms.factor_names.size() == ms.action_counts.size() &&
                 ms.factors.size() == ms.action_counts.size(),
             "one factor kernel per player expected");
  for (std::size_t i = 0; i < ms.factors.size(); ++i) {
    BW_REQUIRE(!ms.factor_names[i].empty(), "empty signal space for a player");
    BW_REQUIRE(ms.factors[i].size() == profiles,
               "private factor needs one row per action profile");
    for (const auto& row : ms.factors[i]) {
      BW_REQUIRE(row.size() == ms.factor_names[i].size(),
                 "factor kernel row width mismatch");
    }
    require_distribution_rows(ms.factors[i], "factor kernel");
  }
  ms.build_joint_from_factors();
  ms.build_doubles();
  return ms;
}

MonitoringStructure MonitoringStructure::perfect(const StageGame& game) {
  std::vector<int> counts;
  for (int i = 0; i < game.num_players(); ++i) counts.push_back(game.num_actions(i));
  std::vector<std::string> names;
  RationalMatrix pi(game.num_profiles(),
                    RationalVector(game.num_profiles(), Rational(0)));
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    auto actions = game.profile_actions(a);
    std::string label;
    for (int i = 0; i < game.num_players(); ++i) {
      if (i) label += ",";
      label += game.action_name(i, actions[i]);
    }
    names.push_back(label);
    pi[a][a] = 1;
  }
  return make_public(std::move(counts), std::move(names), std::move(pi));
}

MonitoringStructure MonitoringStructure::perfect_product(const StageGame& game) {
  std::vector<int> counts;
  std::vector<std::vector<std::string>> names(game.num_players());
  std::vector<RationalMatrix> factors(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    int na = game.num_actions(i);
    counts.push_back(na);
    factors[i].assign(na, RationalVector(na, Rational(0)));
    for (int a = 0; a < na; ++a) {
      names[i].push_back(game.action_name(i, a));
      factors[i][a][a] = 1;
    }
  }
  return make_public_product(std::move(counts), std::move(names),
                             std::move(factors));
}

void MonitoringStructure::validate(const StageGame& game) const {
  BW_REQUIRE(static_cast<int>(action_counts.size()) == game.num_players(),
             "monitoring built for a different number of players");
  for (int i = 0; i < game.num_players(); ++i) {
    BW_REQUIRE(action_counts[i] == game.num_actions(i),
               "monitoring built for a different action space");
  }
}

Rational MonitoringStructure::factor_prob(int player, std::size_t profile,
                                          int signal) const {
  BW_ASSERT(has_factors(), "factor_prob needs a factored kernel");
  if (kind == MonitoringKind::PublicProduct) {
    return factors[player][profile_component(profile, player)][signal];
  }
  return factors[player][profile][signal];
}

double MonitoringStructure::factor_prob_d(int player, std::size_t profile,
                                          int signal) const {
  BW_ASSERT(has_factors(), "factor_prob needs a factored kernel");
  if (kind == MonitoringKind::PublicProduct) {
    return factors_d[player][profile_component(profile, player)][signal];
  }
  return factors_d[player][profile][signal];
}

std::vector<int> MonitoringStructure::joint_components(
    std::size_t joint_signal) const {
  BW_ASSERT(has_factors(), "plain public signals have no coordinates");
  int n = static_cast<int>(factor_names.size());
  std::vector<int> comps(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    std::size_t size = factor_names[i].size();
    comps[i] = static_cast<int>(joint_signal % size);
    joint_signal /= size;
  }
  return comps;
}

void MonitoringStructure::build_joint_from_factors() {
  std::size_t profiles = num_profiles();
  std::size_t joint = 1;
  for (const auto& names : factor_names) joint *= names.size();
  joint_names.assign(joint, "");
  for (std::size_t y = 0; y < joint; ++y) {
    auto comps = joint_components(y);
    std::string label;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i) label += ",";
      label += factor_names[i][comps[i]];
    }
    joint_names[y] = label;
  }
  pi_joint.assign(profiles, RationalVector(joint, Rational(1)));
  for (std::size_t a = 0; a < profiles; ++a) {
    for (std::size_t y = 0; y < joint; ++y) {
      auto comps = joint_components(y);
      for (std::size_t i = 0; i < comps.size(); ++i) {
        pi_joint[a][y] *= factor_prob(static_cast<int>(i), a, comps[i]);
      }
    }
  }
}

void MonitoringStructure::build_doubles() {
  pi_joint_d.assign(pi_joint.size(), {});
  for (std::size_t a = 0; a < pi_joint.size(); ++a) {
    pi_joint_d[a] = to_double_vec(pi_joint[a]);
  }
  factors_d.clear();
  for (const auto& f : factors) {
    std::vector<std::vector<double>> fd;
    for (const auto& row : f) fd.push_back(to_double_vec(row));
    factors_d.push_back(std::move(fd));
  }
}

std::vector<double> profile_mix_probs(
    const StageGame& game, const std::vector<std::vector<double>>& weights) {
  std::vector<double> probs(game.num_profiles(), 1.0);
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    auto actions = game.profile_actions(a);
    for (int i = 0; i < game.num_players(); ++i) {
      probs[a] *= weights[i][actions[i]];
    }
  }
  return probs;
}

RationalVector profile_mix_probs_exact(const StageGame& game,
                                       const MixedProfile& profile) {
  RationalVector probs(game.num_profiles(), Rational(1));
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    auto actions = game.profile_actions(a);
    for (int i = 0; i < game.num_players(); ++i) {
      probs[a] *= profile.actions[i].weights[actions[i]];
    }
  }
  return probs;
}

MonitoringReport check_properties(const StageGame& game,
                                  const MonitoringStructure& ms) {
  ms.validate(game);
  MonitoringReport rep;
  rep.distributions_valid = true;  // constructors enforce exact rows
  rep.min_probability = Rational(1);
  if (ms.kind == MonitoringKind::Private) {
    // Support is judged coordinate by coordinate: every private signal must
    // be possible after every profile.
    for (int i = 0; i < game.num_players(); ++i) {
      for (const auto& row : ms.factors[i]) {
        for (const auto& p : row) {
          rep.min_probability = std::min(rep.min_probability, p);
        }
      }
    }
  } else {
    for (const auto& row : ms.pi_joint) {
      for (const auto& p : row) {
        rep.min_probability = std::min(rep.min_probability, p);
      }
    }
  }
  rep.full_support = rep.min_probability > 0;
  rep.product_structure = ms.kind == MonitoringKind::PublicProduct;
  rep.conditionally_independent = ms.kind != MonitoringKind::Public;
  switch (ms.kind) {
    case MonitoringKind::Public:
      rep.note = "single public signal; no factor structure declared";
      break;
    case MonitoringKind::PublicProduct:
      rep.note = "public coordinates driven by own actions";
      break;
    case MonitoringKind::Private:
      rep.note = "private coordinates, conditionally independent given play";
      break;
  }
  return rep;
}

namespace {

// Rows pi(. | a_i, alpha_{-i}) over joint signals, one per own action.
RationalMatrix own_action_rows(const StageGame& game,
                               const MonitoringStructure& ms, int player,
                               const MixedProfile& profile) {
  std::size_t ny = ms.num_joint_signals();
  RationalMatrix rows(game.num_actions(player), RationalVector(ny, Rational(0)));
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    auto actions = game.profile_actions(a);
    Rational others(1);
    for (int j = 0; j < game.num_players(); ++j) {
      if (j == player) continue;
      others *= profile.actions[j].weights[actions[j]];
    }
    if (others == 0) continue;
    for (std::size_t y = 0; y < ny; ++y) {
      rows[actions[player]][y] += others * ms.pi_joint[a][y];
    }
  }
  return rows;
}

}  // namespace

bool IfrReport::all() const {
  return std::all_of(full_rank.begin(), full_rank.end(), [](bool b) { return b; });
}

IfrReport ifr_check(const StageGame& game, const MonitoringStructure& ms,
                    const MixedProfile& profile) {
  ms.validate(game);
  validate_mixed_profile(game, profile);
  IfrReport rep;
  for (int i = 0; i < game.num_players(); ++i) {
    auto rows = own_action_rows(game, ms, i, profile);
    int rank = rational_rank(rows);
    rep.rank.push_back(rank);
    rep.required.push_back(game.num_actions(i));
    rep.full_rank.push_back(rank == game.num_actions(i));
  }
  return rep;
}

bool PairwiseRankReport::all() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const Entry& e) { return e.full; });
}

PairwiseRankReport pairwise_full_rank_check(const StageGame& game,
                                            const MonitoringStructure& ms,
                                            const MixedProfile& profile) {
  ms.validate(game);
  validate_mixed_profile(game, profile);
  PairwiseRankReport rep;
  for (int i = 0; i < game.num_players(); ++i) {
    auto rows_i = own_action_rows(game, ms, i, profile);
    for (int j = i + 1; j < game.num_players(); ++j) {
      auto rows_j = own_action_rows(game, ms, j, profile);
      RationalMatrix stacked = rows_i;
      stacked.insert(stacked.end(), rows_j.begin(), rows_j.end());
      PairwiseRankReport::Entry e;
      e.player_a = i;
      e.player_b = j;
      e.rank = rational_rank(stacked);
      e.required = game.num_actions(i) + game.num_actions(j) - 1;
      e.full = e.rank == e.required;
      rep.pairs.push_back(e);
    }
  }
  return rep;
}

std::optional<TestPair> find_test_pair(const StageGame& game,
                                       const MonitoringStructure& ms) {
  ms.validate(game);
  std::size_t ny = ms.num_joint_signals();
  BW_DOMAIN(ny <= 16,
            "test pair search is exponential in signals; need at most 16");
  std::size_t masks = std::size_t{1} << ny;

  auto mask_prob_d = [&](std::size_t profile, std::size_t mask) {
    double q = 0;
    for (std::size_t y = 0; y < ny; ++y) {
      if (mask & (std::size_t{1} << y)) q += ms.pi_joint_d[profile][y];
    }
    return q;
  };
  auto worst_drop_d = [&](const std::vector<int>& actions, std::size_t mask,
                          double q) {
    double drop = 2.0;
    for (int i = 0; i < game.num_players(); ++i) {
      for (int ai = 0; ai < game.num_actions(i); ++ai) {
        if (ai == actions[i]) continue;
        auto dev = actions;
        dev[i] = ai;
        drop = std::min(drop, q - mask_prob_d(game.profile_index(dev), mask));
        if (drop <= 0) return drop;
      }
    }
    return drop;
  };

  // Double-precision scan for the best achievable drop.
  double best = 0.0;
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    auto actions = game.profile_actions(a);
    for (std::size_t mask = 1; mask < masks; ++mask) {
      double q = mask_prob_d(a, mask);
      if (q >= 1.0 - 1e-15 || q <= 1e-15) continue;
      best = std::max(best, worst_drop_d(actions, mask, q));
    }
  }
  if (best <= 1e-12) return std::nullopt;

  // Exact re-evaluation of near-winners; the final pick is by rational
  // comparison with deterministic tie-breaking by scan order.
  std::optional<TestPair> out;
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    auto actions = game.profile_actions(a);
    for (std::size_t mask = 1; mask < masks; ++mask) {
      double qd = mask_prob_d(a, mask);
      if (qd >= 1.0 - 1e-15 || qd <= 1e-15) continue;
      if (worst_drop_d(actions, mask, qd) < best - 1e-9) continue;

      Rational q(0);
      for (std::size_t y = 0; y < ny; ++y) {
        if (mask & (std::size_t{1} << y)) q += ms.pi_joint[a][y];
      }
      if (!(q > 0 && q < 1)) continue;
      Rational drop(2);
      bool valid = true;
      for (int i = 0; i < game.num_players() && valid; ++i) {
        for (int ai = 0; ai < game.num_actions(i); ++ai) {
          if (ai == actions[i]) continue;
          auto dev = actions;
          dev[i] = ai;
          std::size_t b = game.profile_index(dev);
          Rational qdev(0);
          for (std::size_t y = 0; y < ny; ++y) {
            if (mask & (std::size_t{1} << y)) qdev += ms.pi_joint[b][y];
          }
          if (qdev >= q) {
            valid = false;
            break;
          }
          drop = std::min(drop, Rational(q - qdev));
        }
      }
      if (!valid || drop <= 0) continue;
      if (!out || drop > out->rho) {
        TestPair tp;
        tp.profile = actions;
        for (std::size_t y = 0; y < ny; ++y) {
          if (mask & (std::size_t{1} << y)) tp.signals.push_back(y);
        }
        tp.q_star = q;
        tp.rho = drop;
        tp.q_star_d = to_double(q);
        tp.rho_d = to_double(drop);
        out = tp;
      }
    }
  }
  return out;
}

}  // namespace blackwell
