#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blackwell/rational.hpp"

namespace blackwell {

// A finite n-player stage game. Payoffs are kept exact; the double view is
// derived and used by the floating-point layers (LPs, scoring sweeps).
class StageGame {
 public:
  StageGame() = default;
  StageGame(std::vector<std::vector<std::string>> action_names,
            std::vector<RationalVector> payoffs);

  static StageGame from_tables(std::vector<std::vector<std::string>> action_names,
                               const std::vector<std::vector<std::string>>& payoff_rows);

  int num_players() const { return static_cast<int>(action_names_.size()); }
  int num_actions(int player) const { return static_cast<int>(action_names_[player].size()); }
  std::size_t num_profiles() const { return num_profiles_; }
  const std::string& action_name(int player, int action) const {
    return action_names_[player][action];
  }
  const std::vector<std::vector<std::string>>& action_names() const { return action_names_; }

  // Profiles are flat-indexed with player 0 as the most significant digit.
  std::size_t profile_index(const std::vector<int>& actions) const;
  std::vector<int> profile_actions(std::size_t index) const;

  const Rational& payoff(std::size_t profile, int player) const {
    return payoffs_[profile][player];
  }
  double payoff_d(std::size_t profile, int player) const {
    return payoffs_d_[profile][player];
  }
  const RationalVector& payoff_vector(std::size_t profile) const { return payoffs_[profile]; }

  double max_abs_payoff() const { return max_abs_payoff_; }
  double min_payoff(int player) const { return min_payoff_[player]; }
  double max_payoff(int player) const { return max_payoff_[player]; }

 private:
  std::vector<std::vector<std::string>> action_names_;
  std::vector<RationalVector> payoffs_;          // [profile][player]
  std::vector<std::vector<double>> payoffs_d_;
  std::size_t num_profiles_ = 0;
  double max_abs_payoff_ = 0;
  std::vector<double> min_payoff_, max_payoff_;
};

// One player's mixed action: exact simplex weights over that player's actions.
struct MixedAction {
  RationalVector weights;

  bool is_pure() const;
  int pure_action() const;  // requires is_pure()
  std::vector<int> support() const;
  static MixedAction pure(int action, int num_actions);
};

// One mixed action per player.
struct MixedProfile {
  std::vector<MixedAction> actions;

  int num_players() const { return static_cast<int>(actions.size()); }
  static MixedProfile pure(const std::vector<int>& a, const StageGame& game);
  std::vector<int> pure_actions() const;  // requires all components pure
  bool is_pure() const;
  std::vector<std::vector<double>> weights_d() const;
  bool operator==(const MixedProfile& other) const;
};

// Support sets, one per player, each sorted ascending.
struct SupportProfile {
  std::vector<std::vector<int>> supports;
  bool operator==(const SupportProfile& other) const { return supports == other.supports; }
};

SupportProfile support_of(const MixedProfile& profile);

void validate_mixed_profile(const StageGame& game, const MixedProfile& profile);

// Probability of the pure profile under independent mixing.
Rational profile_probability(const StageGame& game, const MixedProfile& profile,
                             std::size_t flat_profile);

// Expected stage payoffs under independent mixing, one entry per player.
RationalVector expected_reward(const StageGame& game, const MixedProfile& profile);

// Expected payoff to `player` of playing `action` while everyone else follows
// `profile` (whose own-player component is ignored).
Rational deviation_reward(const StageGame& game, int player, int action,
                          const MixedProfile& profile);

// Double-precision twins used by the scoring layers, operating on plain
// weight arrays (one simplex vector per player).
std::vector<double> expected_reward_d(const StageGame& game,
                                      const std::vector<std::vector<double>>& weights);
double deviation_reward_d(const StageGame& game, int player, int action,
                          const std::vector<std::vector<double>>& weights);

}  // namespace blackwell
