#include "blackwell/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "blackwell/errors.hpp"

namespace blackwell {

StageGame::StageGame(std::vector<std::vector<std::string>> action_names,
                     std::vector<RationalVector> payoffs)
    : action_names_(std::move(action_names)), payoffs_(std::move(payoffs)) {
  BW_REQUIRE(!action_names_.empty(), "game needs at least one player");
  num_profiles_ = 1;
  for (const auto& names : action_names_) {
    BW_REQUIRE(!names.empty(), "every player needs at least one action");
    num_profiles_ *= names.size();
  }
  BW_REQUIRE(payoffs_.size() == num_profiles_,
             "payoff tensor size does not match the action space");
  const auto n = action_names_.size();
  payoffs_d_.resize(num_profiles_);
  min_payoff_.assign(n, std::numeric_limits<double>::infinity());
  max_payoff_.assign(n, -std::numeric_limits<double>::infinity());
  for (std::size_t p = 0; p < num_profiles_; ++p) {
    BW_REQUIRE(payoffs_[p].size() == n, "payoff entry has wrong player count");
    payoffs_d_[p].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double v = to_double(payoffs_[p][i]);
      payoffs_d_[p][i] = v;
      max_abs_payoff_ = std::max(max_abs_payoff_, std::abs(v));
      min_payoff_[i] = std::min(min_payoff_[i], v);
      max_payoff_[i] = std::max(max_payoff_[i], v);
    }
  }
}

StageGame StageGame::from_tables(std::vector<std::vector<std::string>> action_names,
                                 const std::vector<std::vector<std::string>>& payoff_rows) {
  std::vector<RationalVector> payoffs;
  payoffs.reserve(payoff_rows.size());
  for (const auto& row : payoff_rows) {
    RationalVector entry;
    entry.reserve(row.size());
    for (const auto& cell : row) entry.push_back(parse_rational(cell));
    payoffs.push_back(std::move(entry));
  }
  return StageGame(std::move(action_names), std::move(payoffs));
}

std::size_t StageGame::profile_index(const std::vector<int>& actions) const {
  BW_REQUIRE(actions.size() == action_names_.size(), "profile has wrong player count");
  std::size_t index = 0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    BW_REQUIRE(actions[i] >= 0 && actions[i] < num_actions(static_cast<int>(i)),
               "action index out of range");
    index = index * action_names_[i].size() + static_cast<std::size_t>(actions[i]);
  }
  return index;
}

std::vector<int> StageGame::profile_actions(std::size_t index) const {
  std::vector<int> actions(action_names_.size());
  for (std::size_t i = action_names_.size(); i-- > 0;) {
    auto k = action_names_[i].size();
    actions[i] = static_cast<int>(index % k);
    index /= k;
  }
  return actions;
}

bool MixedAction::is_pure() const {
  int ones = 0;
  for (const auto& w : weights) {
    if (w == 1) ++ones;
    else if (w != 0) return false;
  }
  return ones == 1;
}

int MixedAction::pure_action() const {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 1) return static_cast<int>(i);
  }
  throw InternalError("pure_action called on a mixed action");
}

std::vector<int> MixedAction::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] != 0) s.push_back(static_cast<int>(i));
  }
  return s;
}

MixedAction MixedAction::pure(int action, int num_actions) {
  MixedAction m;
  m.weights.assign(num_actions, Rational(0));
  m.weights[action] = 1;
  return m;
}

MixedProfile MixedProfile::pure(const std::vector<int>& a, const StageGame& game) {
  MixedProfile p;
  p.actions.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    p.actions.push_back(MixedAction::pure(a[i], game.num_actions(static_cast<int>(i))));
  }
  return p;
}

std::vector<int> MixedProfile::pure_actions() const {
  std::vector<int> a;
  a.reserve(actions.size());
  for (const auto& m : actions) a.push_back(m.pure_action());
  return a;
}

bool MixedProfile::is_pure() const {
  return std::all_of(actions.begin(), actions.end(),
                     [](const MixedAction& m) { return m.is_pure(); });
}

std::vector<std::vector<double>> MixedProfile::weights_d() const {
  std::vector<std::vector<double>> w(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) w[i] = to_double_vec(actions[i].weights);
  return w;
}

bool MixedProfile::operator==(const MixedProfile& other) const {
  if (actions.size() != other.actions.size()) return false;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].weights != other.actions[i].weights) return false;
  }
  return true;
}

SupportProfile support_of(const MixedProfile& profile) {
  SupportProfile s;
  s.supports.reserve(profile.actions.size());
  for (const auto& m : profile.actions) s.supports.push_back(m.support());
  return s;
}

void validate_mixed_profile(const StageGame& game, const MixedProfile& profile) {
  BW_REQUIRE(profile.num_players() == game.num_players(), "profile has wrong player count");
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& w = profile.actions[i].weights;
    BW_REQUIRE(static_cast<int>(w.size()) == game.num_actions(i),
               "mixed action has wrong length");
    Rational total(0);
    for (const auto& x : w) {
      BW_REQUIRE(x >= 0, "negative mixture weight");
      total += x;
    }
    BW_REQUIRE(total == 1, "mixture weights must sum to one");
  }
}

Rational profile_probability(const StageGame& game, const MixedProfile& profile,
                             std::size_t flat_profile) {
  auto actions = game.profile_actions(flat_profile);
  Rational p(1);
  for (std::size_t i = 0; i < actions.size(); ++i) {
    p *= profile.actions[i].weights[actions[i]];
    if (p == 0) return p;
  }
  return p;
}

RationalVector expected_reward(const StageGame& game, const MixedProfile& profile) {
  validate_mixed_profile(game, profile);
  RationalVector out(game.num_players(), Rational(0));
  for (std::size_t p = 0; p < game.num_profiles(); ++p) {
    Rational prob = profile_probability(game, profile, p);
    if (prob == 0) continue;
    for (int i = 0; i < game.num_players(); ++i) out[i] += prob * game.payoff(p, i);
  }
  return out;
}

Rational deviation_reward(const StageGame& game, int player, int action,
                          const MixedProfile& profile) {
  BW_REQUIRE(player >= 0 && player < game.num_players(), "player index out of range");
  BW_REQUIRE(action >= 0 && action < game.num_actions(player), "action index out of range");
  MixedProfile swapped = profile;
  swapped.actions[player] = MixedAction::pure(action, game.num_actions(player));
  return expected_reward(game, swapped)[player];
}

std::vector<double> expected_reward_d(const StageGame& game,
                                      const std::vector<std::vector<double>>& weights) {
  std::vector<double> out(game.num_players(), 0.0);
  for (std::size_t p = 0; p < game.num_profiles(); ++p) {
    auto actions = game.profile_actions(p);
    double prob = 1;
    for (std::size_t i = 0; i < actions.size(); ++i) prob *= weights[i][actions[i]];
    if (prob == 0) continue;
    for (int i = 0; i < game.num_players(); ++i) out[i] += prob * game.payoff_d(p, i);
  }
  return out;
}

double deviation_reward_d(const StageGame& game, int player, int action,
                          const std::vector<std::vector<double>>& weights) {
  auto swapped = weights;
  std::fill(swapped[player].begin(), swapped[player].end(), 0.0);
  swapped[player][action] = 1.0;
  return expected_reward_d(game, swapped)[player];
}

}  // namespace blackwell
