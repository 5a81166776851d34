#include "blackwell/stream.hpp"

#include <cmath>

#include "blackwell/errors.hpp"

namespace blackwell {

std::size_t PayoffStream::profile_at(std::size_t t) const {
  if (t < preamble.size()) return preamble[t];
  BW_REQUIRE(!cycle.empty(), "finite stream has no element at requested time");
  return cycle[(t - preamble.size()) % cycle.size()];
}

DiscountGrid DiscountGrid::linspace(double lo, double hi, int count) {
  validate_delta(lo);
  validate_delta(hi);
  BW_REQUIRE(lo <= hi, "discount grid bounds out of order");
  BW_REQUIRE(count >= 1, "discount grid needs at least one point");
  DiscountGrid g;
  g.points.reserve(count);
  if (count == 1) {
    g.points.push_back(lo);
    return g;
  }
  for (int k = 0; k < count; ++k) {
    g.points.push_back(lo + (hi - lo) * static_cast<double>(k) / (count - 1));
  }
  return g;
}

DiscountGrid DiscountGrid::single(double delta) {
  validate_delta(delta);
  DiscountGrid g;
  g.points.push_back(delta);
  return g;
}

void validate_delta(double delta) {
  BW_REQUIRE(delta > 0.0 && delta < 1.0, "discount factor must lie strictly in (0, 1)");
}

namespace {

// (1-d) * sum_{t<len} d^t c_t over one pass, plus the remaining weight d^len.
double finite_part(const std::vector<double>& values, double delta, double& weight_left) {
  double acc = 0;
  double w = 1;
  for (double v : values) {
    acc += w * v;
    w *= delta;
  }
  weight_left = w;
  return acc * (1 - delta);
}

}  // namespace

double discounted_value(const ScalarStream& stream, double delta) {
  validate_delta(delta);
  double tail_weight = 0;
  double value = finite_part(stream.preamble, delta, tail_weight);
  if (!stream.cycle.empty()) {
    double cycle_weight = 0;
    double cycle_value = finite_part(stream.cycle, delta, cycle_weight);
    double cycle_len_discount = std::pow(delta, static_cast<double>(stream.cycle.size()));
    value += tail_weight * cycle_value / (1 - cycle_len_discount);
  }
  return value;
}

std::vector<double> discounted_value(const StageGame& game, const PayoffStream& stream,
                                     double delta) {
  std::vector<double> out(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    out[i] = discounted_value(scalar_stream(game, stream, i), delta);
  }
  return out;
}

std::vector<double> suffix_values(const ScalarStream& stream, double delta) {
  validate_delta(delta);
  const std::size_t np = stream.preamble.size(), nc = stream.cycle.size();
  std::vector<double> out(np + nc, 0.0);
  if (nc > 0) {
    // Cycle suffix values satisfy v_k = (1-d) c_k + d v_{k+1 mod nc}.
    double cycle_weight = 0;
    double base = finite_part(stream.cycle, delta, cycle_weight);
    double denom = 1 - cycle_weight;
    out[np] = base / denom;
    for (std::size_t k = nc; k-- > 1;) {
      // walk backwards: v_k = (1-d) c_k + d v_{k+1}, with v_nc meaning v_0
      double next = (k + 1 == nc) ? out[np] : out[np + k + 1];
      out[np + k] = (1 - delta) * stream.cycle[k] + delta * next;
    }
    if (nc == 1) out[np] = stream.cycle[0];
  }
  double after_preamble = nc > 0 ? out[np] : 0.0;
  for (std::size_t t = np; t-- > 0;) {
    double next = (t + 1 < np) ? out[t + 1] : after_preamble;
    out[t] = (1 - delta) * stream.preamble[t] + delta * next;
  }
  return out;
}

std::vector<std::vector<double>> suffix_values(const StageGame& game,
                                               const PayoffStream& stream, double delta) {
  std::vector<std::vector<double>> out(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    out[i] = suffix_values(scalar_stream(game, stream, i), delta);
  }
  return out;
}

ScalarStream scalar_stream(const StageGame& game, const PayoffStream& stream, int player) {
  ScalarStream s;
  s.preamble.reserve(stream.preamble.size());
  for (auto p : stream.preamble) s.preamble.push_back(game.payoff_d(p, player));
  s.cycle.reserve(stream.cycle.size());
  for (auto p : stream.cycle) s.cycle.push_back(game.payoff_d(p, player));
  return s;
}

RationalVector discounted_value_exact(const StageGame& game, const PayoffStream& stream,
                                      const Rational& delta) {
  BW_REQUIRE(delta > 0 && delta < 1, "discount factor must lie strictly in (0, 1)");
  const int n = game.num_players();
  RationalVector acc(n, Rational(0));
  Rational w(1);
  for (auto p : stream.preamble) {
    for (int i = 0; i < n; ++i) acc[i] += w * game.payoff(p, i);
    w *= delta;
  }
  if (!stream.cycle.empty()) {
    RationalVector cyc(n, Rational(0));
    Rational cw(1);
    for (auto p : stream.cycle) {
      for (int i = 0; i < n; ++i) cyc[i] += cw * game.payoff(p, i);
      cw *= delta;
    }
    Rational denom = 1 - cw;  // cw = delta^len
    for (int i = 0; i < n; ++i) acc[i] += w * cyc[i] / denom;
  }
  for (int i = 0; i < n; ++i) acc[i] *= (1 - delta);
  return acc;
}

}  // namespace blackwell
