#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blackwell/game.hpp"
#include "blackwell/rational.hpp"

namespace blackwell {

// Three kinds of signal structure:
//  - Public: one commonly observed signal with kernel pi(y | a).
//  - PublicProduct: the public signal splits into per-player coordinates,
//    coordinate i depending only on player i's own action.
//  - Private: each player privately observes own coordinate y_i, distributed
//    conditionally independently across players given the action profile.
enum class MonitoringKind { Public, PublicProduct, Private };

class MonitoringStructure {
 public:
  static MonitoringStructure make_public(std::vector<int> action_counts,
                                         std::vector<std::string> signal_names,
                                         RationalMatrix pi);
  // factors[i] is |A_i| x |Y_i|: own-action kernels.
  static MonitoringStructure make_public_product(
      std::vector<int> action_counts,
      std::vector<std::vector<std::string>> factor_names,
      std::vector<RationalMatrix> factors);
  // factors[i] is |A| x |Y_i|: full-profile kernels, one per player, with
  // profiles indexed player 0 most significant.
  static MonitoringStructure make_private(
      std::vector<int> action_counts,
      std::vector<std::vector<std::string>> factor_names,
      std::vector<RationalMatrix> factors);
  // Public signal that reveals the realized action profile.
  static MonitoringStructure perfect(const StageGame& game);
  // Product-form public signal where coordinate i reveals a_i.
  static MonitoringStructure perfect_product(const StageGame& game);

  // Checks shape compatibility with a game. Probability validity is enforced
  // at construction.
  void validate(const StageGame& game) const;

  MonitoringKind kind = MonitoringKind::Public;
  std::vector<int> action_counts;

  // Joint view over the product of coordinates (or the raw public space).
  std::vector<std::string> joint_names;
  RationalMatrix pi_joint;                     // [profile][joint signal]
  std::vector<std::vector<double>> pi_joint_d;

  // Factored view; empty for plain Public.
  std::vector<std::vector<std::string>> factor_names;
  std::vector<RationalMatrix> factors;
  std::vector<std::vector<std::vector<double>>> factors_d;

  std::size_t num_joint_signals() const { return joint_names.size(); }
  int num_factor_signals(int player) const {
    return static_cast<int>(factor_names[player].size());
  }
  bool has_factors() const { return !factors.empty(); }
  std::size_t num_profiles() const;

  // Player's own action inside a profile index.
  int profile_component(std::size_t profile, int player) const;
  // Probability of player i's coordinate given the realized pure profile.
  Rational factor_prob(int player, std::size_t profile, int signal) const;
  double factor_prob_d(int player, std::size_t profile, int signal) const;
  // Decomposes a joint signal index into per-player coordinates.
  std::vector<int> joint_components(std::size_t joint_signal) const;

 private:
  void build_joint_from_factors();
  void build_doubles();
};

// Probability of each pure profile under independent mixing weights.
std::vector<double> profile_mix_probs(const StageGame& game,
                                      const std::vector<std::vector<double>>& weights);
RationalVector profile_mix_probs_exact(const StageGame& game,
                                       const MixedProfile& profile);

struct MonitoringReport {
  bool distributions_valid = false;
  bool full_support = false;
  Rational min_probability;      // over profiles and signals
  bool product_structure = false;
  bool conditionally_independent = false;
  std::string note;
};
MonitoringReport check_properties(const StageGame& game,
                                  const MonitoringStructure& ms);

struct IfrReport {
  // Per player: the rows pi(. | a_i, alpha_{-i}) indexed by own actions,
  // tested for linear independence over the joint signal space.
  std::vector<bool> full_rank;
  std::vector<int> rank;
  std::vector<int> required;
  bool all() const;
};
IfrReport ifr_check(const StageGame& game, const MonitoringStructure& ms,
                    const MixedProfile& profile);

struct PairwiseRankReport {
  struct Entry {
    int player_a = 0, player_b = 0;
    int rank = 0, required = 0;
    bool full = false;
  };
  std::vector<Entry> pairs;
  bool all() const;
};
PairwiseRankReport pairwise_full_rank_check(const StageGame& game,
                                            const MonitoringStructure& ms,
                                            const MixedProfile& profile);

// A pure profile and a signal event whose probability strictly drops under
// every unilateral deviation: the statistical test used to police play.
struct TestPair {
  std::vector<int> profile;
  std::vector<std::size_t> signals;  // joint signal indices in the event
  Rational q_star;                   // event probability on path
  Rational rho;                      // smallest drop under a deviation
  double q_star_d = 0, rho_d = 0;
};
// Scans pure profiles and signal events, maximizing the worst-case drop.
// Ties break toward the lower profile index, then the smaller event mask.
std::optional<TestPair> find_test_pair(const StageGame& game,
                                       const MonitoringStructure& ms);

}  // namespace blackwell
