#pragma once

#include <cstddef>
#include <vector>

#include "blackwell/game.hpp"
#include "blackwell/rational.hpp"

namespace blackwell {

// Eventually periodic path of pure action profiles, stored as flat profile
// indices: preamble once, then the cycle forever. A finite path has an empty
// cycle.
struct PayoffStream {
  std::vector<std::size_t> preamble;
  std::vector<std::size_t> cycle;

  bool infinite() const { return !cycle.empty(); }
  std::size_t profile_at(std::size_t t) const;
};

// Eventually periodic scalar reward stream (already reduced to one player).
struct ScalarStream {
  std::vector<double> preamble;
  std::vector<double> cycle;
};

struct DiscountGrid {
  std::vector<double> points;

  static DiscountGrid linspace(double lo, double hi, int count);
  static DiscountGrid single(double delta);
};

void validate_delta(double delta);

// Average discounted value (1-delta) * sum delta^t g(a_t), one per player.
// Finite streams are evaluated as-is without the tail.
std::vector<double> discounted_value(const StageGame& game, const PayoffStream& stream,
                                     double delta);

double discounted_value(const ScalarStream& stream, double delta);

// Value of every suffix of the stream: entry t is the average discounted
// value of (a_t, a_{t+1}, ...). Returns preamble-length + cycle-length values;
// suffixes starting inside the cycle repeat from there on.
std::vector<double> suffix_values(const ScalarStream& stream, double delta);
std::vector<std::vector<double>> suffix_values(const StageGame& game,
                                               const PayoffStream& stream, double delta);

ScalarStream scalar_stream(const StageGame& game, const PayoffStream& stream, int player);

// Exact evaluation for rational discount factors; used by identity checks.
RationalVector discounted_value_exact(const StageGame& game, const PayoffStream& stream,
                                      const Rational& delta);

}  // namespace blackwell
