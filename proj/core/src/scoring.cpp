#include "blackwell/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "blackwell/equilibria.hpp"
#include "blackwell/errors.hpp"
#include "blackwell/lp.hpp"
#include "blackwell/parallel.hpp"

namespace blackwell {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void require_public(const MonitoringStructure& ms) {
  BW_REQUIRE(ms.kind != MonitoringKind::Private,
             "scoring programs condition continuation transfers on a common "
             "signal; private monitoring has none");
}

// Golden-section maximizer for a scalar function on [lo, hi]; tol bounds the
// final bracket width. Returns (argmax, value).
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol) {
  const double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// Direction-independent pieces of the per-profile score program.
struct ProfileKernel {
  std::vector<std::vector<double>> weights;           // one simplex per player
  std::vector<double> g;                              // expected payoffs
  std::vector<double> pbar;                           // on-path signal law
  std::vector<std::vector<std::vector<double>>> dev;  // [player][action][signal]
  std::vector<std::vector<double>> dev_g;             // [player][action]
  std::vector<std::vector<char>> on;                  // action in own support
};

ProfileKernel make_kernel(const StageGame& game, const MonitoringStructure& ms,
                          std::vector<std::vector<double>> weights) {
  ProfileKernel ker;
  const int n = game.num_players();
  const std::size_t m = ms.num_joint_signals();
  ker.weights = std::move(weights);
  ker.g = expected_reward_d(game, ker.weights);
  ker.dev.resize(n);
  ker.dev_g.resize(n);
  ker.on.resize(n);
  for (int i = 0; i < n; ++i) {
    const int count = game.num_actions(i);
    ker.dev[i].assign(count, std::vector<double>(m, 0.0));
    ker.dev_g[i].assign(count, 0.0);
    ker.on[i].assign(count, 0);
    for (int ai = 0; ai < count; ++ai) {
      ker.dev_g[i][ai] = deviation_reward_d(game, i, ai, ker.weights);
      ker.on[i][ai] = ker.weights[i][ai] > 1e-12 ? 1 : 0;
    }
  }
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    const auto acts = game.profile_actions(a);
    const auto& row = ms.pi_joint_d[a];
    for (int i = 0; i < n; ++i) {
      double w = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) w *= ker.weights[j][acts[j]];
      if (w == 0.0) continue;
      auto& dest = ker.dev[i][acts[i]];
      for (std::size_t y = 0; y < m; ++y) dest[y] += w * row[y];
    }
  }
  // averaging player 0's deviation rows over the own mix gives the path law
  ker.pbar.assign(m, 0.0);
  for (int a0 = 0; a0 < game.num_actions(0); ++a0)
    for (std::size_t y = 0; y < m; ++y)
      ker.pbar[y] += ker.weights[0][a0] * ker.dev[0][a0][y];
  return ker;
}

struct KernelScore {
  bool feasible = false;
  double score = kNegInf;
  std::vector<std::vector<double>> x;  // [signal][player]
  std::vector<double> v;
};

// Solves max direction . v over transfers enforcing the kernel's profile,
// with direction . x(y) <= 0 per signal.
KernelScore score_kernel(const StageGame& game, std::size_t m, const ProfileKernel& ker,
                         const std::vector<double>& lambda) {
  const int n = game.num_players();
  const std::size_t nv = static_cast<std::size_t>(n) * m;
  LpProblem<double> p;
  p.num_vars = nv;
  p.objective.assign(nv, 0.0);
  for (int i = 0; i < n; ++i)
    for (std::size_t y = 0; y < m; ++y) p.objective[i * m + y] = lambda[i] * ker.pbar[y];
  for (int i = 0; i < n; ++i) {
    for (int ai = 0; ai < game.num_actions(i); ++ai) {
      std::vector<double> c(nv, 0.0);
      double mag = 0;
      for (std::size_t y = 0; y < m; ++y) {
        c[i * m + y] = ker.dev[i][ai][y] - ker.pbar[y];
        mag = std::max(mag, std::abs(c[i * m + y]));
      }
      const double rhs = ker.g[i] - ker.dev_g[i][ai];
      if (mag < 1e-13 && std::abs(rhs) < 1e-13) continue;  // playing the profile itself
      p.add_row(std::move(c), ker.on[i][ai] ? LpRel::Eq : LpRel::Le, rhs);
    }
  }
  for (std::size_t y = 0; y < m; ++y) {
    std::vector<double> c(nv, 0.0);
    for (int i = 0; i < n; ++i) c[i * m + y] = lambda[i];
    p.add_row(std::move(c), LpRel::Le, 0.0);
  }
  const auto sol = solve_lp(p);
  KernelScore out;
  if (sol.status == LpStatus::Infeasible) return out;
  BW_ASSERT(sol.status == LpStatus::Optimal,
            "budget rows cap the transfer surplus at zero, the score program "
            "cannot be unbounded");
  out.feasible = true;
  out.score = dot(lambda, ker.g) + sol.objective;
  out.v.assign(n, 0.0);
  out.x.assign(m, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    double drift = 0;
    for (std::size_t y = 0; y < m; ++y) {
      out.x[y][i] = sol.x[i * m + y];
      drift += ker.pbar[y] * sol.x[i * m + y];
    }
    out.v[i] = ker.g[i] + drift;
  }
  return out;
}

// Re-derives the witness obligations from scratch; aborts on violation.
void check_witness(const StageGame& game, std::size_t m, const std::vector<double>& lambda,
                   const ProfileKernel& ker, const KernelScore& ks) {
  const int n = game.num_players();
  double xmax = 0, lmax = 0;
  for (const auto& col : ks.x)
    for (double t : col) xmax = std::max(xmax, std::abs(t));
  for (double t : lambda) lmax = std::max(lmax, std::abs(t));
  const double budget_tol = 1e-9 * std::max(1.0, xmax) * std::max(1.0, lmax);
  for (std::size_t y = 0; y < m; ++y) {
    double b = 0;
    for (int i = 0; i < n; ++i) b += lambda[i] * ks.x[y][i];
    BW_ASSERT(b <= budget_tol,
              "witness transfers must stay on the nonpositive side of the direction");
  }
  const double ic_tol = 1e-7 * std::max({1.0, xmax, game.max_abs_payoff()});
  for (int i = 0; i < n; ++i) {
    for (int ai = 0; ai < game.num_actions(i); ++ai) {
      double uhat = ker.dev_g[i][ai];
      for (std::size_t y = 0; y < m; ++y) uhat += ker.dev[i][ai][y] * ks.x[y][i];
      if (ker.on[i][ai]) {
        BW_ASSERT(std::abs(uhat - ks.v[i]) <= ic_tol,
                  "supported actions must tie the augmented value");
      } else {
        BW_ASSERT(uhat <= ks.v[i] + ic_tol,
                  "a deviation must not beat the augmented value");
      }
    }
  }
}

ScoreResult package_score(const StageGame& game, std::size_t m,
                          const std::vector<double>& lambda, const MixedProfile& profile,
                          const ProfileKernel& ker, const KernelScore& ks) {
  ScoreResult r;
  r.direction = lambda;
  r.feasible = ks.feasible;
  if (!ks.feasible) return r;
  check_witness(game, m, lambda, ker, ks);
  r.score = ks.score;
  r.witness.profile = profile;
  r.witness.transfers = ks.x;
  r.witness.value = ks.v;
  return r;
}

// ---- limit-set sweep ----

// One direction's bounding halfspace, direction . v <= k. Directions probed
// through rational programs carry their exact normal and offset.
struct WallRec {
  double ang = 0;
  std::vector<double> lambda;
  double k = kNegInf;
  bool feasible = false;
  int best = -1;  // kernel index attaining k in the numeric sweeps
  bool exact = false;
  Rational el0, el1, ek;
};

// Stage data for one pure profile, exact.
struct PureRow {
  int player = 0;
  Rational gain;        // deviation payoff minus path payoff
  RationalVector diff;  // deviation signal law minus path law
};

struct PureData {
  RationalVector g;
  RationalVector pbar;
  std::vector<PureRow> rows;
};

PureData pure_profile_data(const StageGame& game, const MonitoringStructure& ms,
                           std::size_t index) {
  const std::size_t m = ms.num_joint_signals();
  PureData pd;
  const auto acts = game.profile_actions(index);
  pd.g = game.payoff_vector(index);
  pd.pbar = ms.pi_joint[index];
  for (int i = 0; i < 2; ++i) {
    for (int b = 0; b < game.num_actions(i); ++b) {
      if (b == acts[i]) continue;
      auto dev_acts = acts;
      dev_acts[i] = b;
      const std::size_t d = game.profile_index(dev_acts);
      PureRow row;
      row.player = i;
      row.gain = game.payoff(d, i) - pd.g[i];
      row.diff.resize(m);
      for (std::size_t y = 0; y < m; ++y) row.diff[y] = ms.pi_joint[d][y] - pd.pbar[y];
      pd.rows.push_back(std::move(row));
    }
  }
  return pd;
}

bool single_signed(const Rational& l0, const Rational& l1) {
  return (l0 >= 0 && l1 >= 0) || (l0 <= 0 && l1 <= 0);
}

// In a direction with opposite-sign weights, admissible continuation
// adjustments move along the direction's level line: x(y) = c_y t with t
// orthogonal to the direction. Deviations with a stage gain then need slack
// that survives, so the program maximizes the worst slack over gainful rows
// (capped at one); gainless rows may sit at equality. The profile holds in
// the direction iff the best worst slack is positive.
bool tangential_enforceable(const PureData& pd, std::size_t m, const Rational& l0,
                            const Rational& l1) {
  const Rational t[2] = {-l1, l0};
  LpProblem<Rational> p;
  p.num_vars = m + 1;  // c_y free, then the slack
  p.nonneg.assign(m + 1, false);
  p.nonneg[m] = true;
  p.objective.assign(m + 1, Rational(0));
  p.objective[m] = 1;
  {
    RationalVector cap(m + 1, Rational(0));
    cap[m] = 1;
    p.add_row(std::move(cap), LpRel::Le, Rational(1));
  }
  for (const auto& row : pd.rows) {
    RationalVector c(m + 1, Rational(0));
    bool detect = false;
    for (std::size_t y = 0; y < m; ++y) {
      c[y] = row.diff[y] * t[row.player];
      if (c[y] != 0) detect = true;
    }
    if (!detect) {
      if (row.gain > 0) return false;  // profitable and invisible
      continue;
    }
    if (row.gain == 0) {
      p.add_row(std::move(c), LpRel::Le, Rational(0));
    } else {
      c[m] = 1;
      p.add_row(std::move(c), LpRel::Le, -row.gain);
    }
  }
  const auto sol = solve_lp(p);
  return sol.status == LpStatus::Optimal && sol.objective > 0;
}

// Largest direction . v over transfers keeping every per-signal adjustment
// on the nonpositive side of the direction; exact, pure profile. nullopt
// when no such transfers enforce the profile.
std::optional<Rational> budget_score(const PureData& pd, std::size_t m, const Rational& l0,
                                     const Rational& l1) {
  LpProblem<Rational> p;
  p.num_vars = 2 * m;  // x_i(y), free
  p.nonneg.assign(2 * m, false);
  p.objective.assign(2 * m, Rational(0));
  for (std::size_t y = 0; y < m; ++y) {
    p.objective[y] = l0 * pd.pbar[y];
    p.objective[m + y] = l1 * pd.pbar[y];
  }
  for (const auto& row : pd.rows) {
    RationalVector c(2 * m, Rational(0));
    bool detect = false;
    for (std::size_t y = 0; y < m; ++y) {
      c[static_cast<std::size_t>(row.player) * m + y] = row.diff[y];
      if (row.diff[y] != 0) detect = true;
    }
    if (!detect) {
      if (row.gain > 0) return std::nullopt;  // profitable and invisible
      continue;
    }
    p.add_row(std::move(c), LpRel::Le, -row.gain);
  }
  for (std::size_t y = 0; y < m; ++y) {
    RationalVector c(2 * m, Rational(0));
    c[y] = l0;
    c[m + y] = l1;
    p.add_row(std::move(c), LpRel::Le, Rational(0));
  }
  const auto sol = solve_lp(p);
  if (sol.status == LpStatus::Infeasible) return std::nullopt;
  BW_ASSERT(sol.status == LpStatus::Optimal,
            "budget rows cap the transfer surplus at zero, the exact score "
            "program cannot be unbounded");
  return l0 * pd.g[0] + l1 * pd.g[1] + sol.objective;
}

// Exact bound in an exact direction over the pure profiles: budget transfers
// when the direction weights both players the same way, level-line transfers
// otherwise (there the bound is the best enforceable stage payoff, since
// level-line transfers contribute nothing along the direction). Profiles are
// scanned in descending stage-bound order; transfers never beat the stage
// bound, so the scan stops once it falls under the best value found.
WallRec eval_pure_exact(const std::vector<PureData>& profs, std::size_t m, const Rational& l0,
                        const Rational& l1) {
  WallRec rec;
  rec.exact = true;
  rec.el0 = l0;
  rec.el1 = l1;
  const double n0 = to_double(l0), n1 = to_double(l1);
  const double nn = std::hypot(n0, n1);
  rec.lambda = {n0 / nn, n1 / nn};
  double ang = std::atan2(rec.lambda[1], rec.lambda[0]);
  if (ang < 0) ang += 2.0 * kPi;
  rec.ang = ang;
  const bool budget = single_signed(l0, l1);
  std::vector<std::pair<Rational, std::size_t>> order(profs.size());
  for (std::size_t i = 0; i < profs.size(); ++i)
    order[i] = {l0 * profs[i].g[0] + l1 * profs[i].g[1], i};
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::optional<Rational> best;
  for (const auto& [bound, idx] : order) {
    if (best && bound <= *best) break;
    std::optional<Rational> val;
    if (budget)
      val = budget_score(profs[idx], m, l0, l1);
    else if (tangential_enforceable(profs[idx], m, l0, l1))
      val = bound;
    if (val && (!best || *val > *best)) {
      best = std::move(*val);
      rec.best = static_cast<int>(idx);
    }
  }
  if (!best) return rec;
  rec.feasible = true;
  rec.ek = std::move(*best);
  rec.k = to_double(rec.ek) / nn;
  return rec;
}

// Directions where the bounding program can change shape: axes, normals of
// stage-payoff ties, feasible-boundary normals, and (two joint signals only)
// the closed-form directions where level-line enforceability flips for some
// pair of deviations. All are L1-normalized so duplicates collapse.
std::vector<std::pair<Rational, Rational>> critical_directions(
    const std::vector<PureData>& profs, const PayoffPolytope& feasible, std::size_t m) {
  std::vector<std::pair<Rational, Rational>> out;
  auto push_pm = [&out](Rational a, Rational b) {
    if (a == 0 && b == 0) return;
    const Rational n = rational_abs(a) + rational_abs(b);
    a /= n;
    b /= n;
    out.emplace_back(-a, -b);
    out.emplace_back(std::move(a), std::move(b));
  };
  push_pm(Rational(1), Rational(0));
  push_pm(Rational(0), Rational(1));
  for (std::size_t i = 0; i < profs.size(); ++i)
    for (std::size_t j = i + 1; j < profs.size(); ++j)
      push_pm(profs[i].g[1] - profs[j].g[1], profs[j].g[0] - profs[i].g[0]);
  for (const auto& h : feasible.halfspaces) push_pm(h.normal[0], h.normal[1]);
  if (m == 2) {
    for (const auto& pd : profs)
      for (const auto& r : pd.rows) {
        if (r.player != 0 || r.gain == 0 || r.diff[0] == 0) continue;
        for (const auto& s : pd.rows) {
          if (s.player != 1 || s.gain == 0 || s.diff[0] == 0) continue;
          push_pm(s.gain * r.diff[0], -(r.gain * s.diff[0]));
        }
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Continued-fraction convergent of t with the denominator capped. Callers
// pass a ratio of unit-vector coordinates, so |t| <= 1.
std::pair<long long, long long> cf_approx(double t, long long max_den) {
  double x = t;
  long long pa = 1, pb = 0, qa = 0, qb = 1;
  for (int it = 0; it < 64; ++it) {
    const double ip = std::floor(x);
    if (std::abs(ip) > 1e15) break;
    const long long a = static_cast<long long>(ip);
    const long long pn = a * pa + pb;
    const long long qn = a * qa + qb;
    if (qn > max_den) break;
    pb = pa;
    pa = pn;
    qb = qa;
    qa = qn;
    const double frac = x - ip;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return {pa, qa};
}

// Small exact direction matching the angle's unit vector to working
// precision. Any direction yields a valid bound, so the rationalization only
// needs to stay close, not hit the angle exactly.
std::pair<Rational, Rational> small_direction(double ang) {
  const double x = std::cos(ang), y = std::sin(ang);
  if (std::abs(y) <= std::abs(x)) {
    const auto [num, den] = cf_approx(y / x, 4096);
    const Rational s(x >= 0 ? 1 : -1);
    return {s * Rational(den), s * Rational(num)};
  }
  const auto [num, den] = cf_approx(x / y, 4096);
  const Rational s(y >= 0 ? 1 : -1);
  return {s * Rational(num), s * Rational(den)};
}

// Clipping polygon with the halfspace index that carries each edge.
struct ClipPoly {
  std::vector<double> xs, ys;
  std::vector<int> src;  // edge from vertex i to i+1; -1 for the seed box
};

ClipPoly clip_records(const std::vector<WallRec>& recs, double lo0, double lo1, double hi0,
                      double hi1, double inflate) {
  ClipPoly poly;
  poly.xs = {lo0, hi0, hi0, lo0};
  poly.ys = {lo1, lo1, hi1, hi1};
  poly.src = {-1, -1, -1, -1};
  for (std::size_t h = 0; h < recs.size(); ++h) {
    if (poly.xs.empty()) break;
    const double nx = recs[h].lambda[0], ny = recs[h].lambda[1];
    const double c = recs[h].k + inflate;
    ClipPoly next;
    const std::size_t sz = poly.xs.size();
    for (std::size_t i = 0; i < sz; ++i) {
      const std::size_t j = (i + 1) % sz;
      const double di = nx * poly.xs[i] + ny * poly.ys[i] - c;
      const double dj = nx * poly.xs[j] + ny * poly.ys[j] - c;
      const bool ini = di <= 0, inj = dj <= 0;
      auto cross_point = [&](int source) {
        const double t = di / (di - dj);
        next.xs.push_back(poly.xs[i] + t * (poly.xs[j] - poly.xs[i]));
        next.ys.push_back(poly.ys[i] + t * (poly.ys[j] - poly.ys[i]));
        next.src.push_back(source);
      };
      if (ini) {
        next.xs.push_back(poly.xs[i]);
        next.ys.push_back(poly.ys[i]);
        next.src.push_back(poly.src[i]);
        if (!inj) cross_point(static_cast<int>(h));
      } else if (inj) {
        cross_point(poly.src[i]);
      }
    }
    poly = std::move(next);
  }
  return poly;
}

// Indices of records whose halfspace carries real boundary, longest first.
std::vector<std::size_t> essential_sources(const ClipPoly& poly, std::size_t nrec,
                                           double min_edge) {
  std::vector<double> len(nrec, 0.0);
  const std::size_t sz = poly.xs.size();
  for (std::size_t i = 0; i < sz; ++i) {
    const std::size_t j = (i + 1) % sz;
    if (poly.src[i] < 0) continue;
    len[static_cast<std::size_t>(poly.src[i])] +=
        std::hypot(poly.xs[j] - poly.xs[i], poly.ys[j] - poly.ys[i]);
  }
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < nrec; ++h)
    if (len[h] > min_edge) out.push_back(h);
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    if (len[a] != len[b]) return len[a] > len[b];
    return a < b;
  });
  return out;
}

// Drops essentials nearly parallel to an already kept (longer) one: boundary
// refinement leaves clusters of directions around each facet normal, and the
// dominant carrier is the right representative.
std::vector<std::size_t> merge_parallel(const std::vector<WallRec>& recs,
                                        const std::vector<std::size_t>& ess) {
  std::vector<std::size_t> kept;
  for (auto h : ess) {
    bool dup = false;
    for (auto g : kept) {
      const double cr =
          recs[h].lambda[0] * recs[g].lambda[1] - recs[h].lambda[1] * recs[g].lambda[0];
      if (std::abs(cr) <= 1e-9 && dot(recs[h].lambda, recs[g].lambda) > 0) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(h);
  }
  return kept;
}

struct ClipBox {
  double lo0, lo1, hi0, hi1, inflate;
};

ClipBox clip_box(const StageGame& game) {
  ClipBox b{game.min_payoff(0), game.min_payoff(1), game.max_payoff(0), game.max_payoff(1), 0};
  const double pad =
      1.0 + 0.1 * std::max({1.0, std::abs(b.lo0), std::abs(b.hi0), std::abs(b.lo1),
                            std::abs(b.hi1)});
  b.lo0 -= pad;
  b.lo1 -= pad;
  b.hi0 += pad;
  b.hi1 += pad;
  b.inflate = 1e-11 * std::max(1.0, game.max_abs_payoff());
  return b;
}

PayoffPolytope empty_plane_set() {
  PayoffPolytope p;
  p.ambient = 2;
  p.empty = true;
  p.reduced = true;
  return p;
}

// Exact polygon from the swept directions: clip in double to find the facet
// carriers, then re-intersect just those exactly, using the walls' exact
// normals and offsets where available. Falls back to snapping the clipped
// polygon when the boundary has too many facets (curved sweeps).
PayoffPolytope assemble(const std::vector<WallRec>& recs, const StageGame& game,
                        double snap) {
  const ClipBox box = clip_box(game);
  const auto poly = clip_records(recs, box.lo0, box.lo1, box.hi0, box.hi1, box.inflate);
  if (poly.xs.empty()) return empty_plane_set();
  const auto ess = merge_parallel(recs, essential_sources(poly, recs.size(), snap));
  if (ess.size() >= 3 && ess.size() <= 200) {
    std::vector<Halfspace> hs;
    hs.reserve(ess.size());
    for (auto h : ess) {
      Halfspace w;
      if (recs[h].exact) {
        w.normal = {recs[h].el0, recs[h].el1};
        w.offset = recs[h].ek;
      } else {
        w.normal = {rational_from_double(recs[h].lambda[0]),
                    rational_from_double(recs[h].lambda[1])};
        w.offset = rational_from_double(recs[h].k);
      }
      hs.push_back(std::move(w));
    }
    auto exact = intersect_halfspaces_2d(hs);
    if (!exact.empty && exact.bounded && !exact.vertices.empty()) return exact;
  }
  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < poly.xs.size(); ++i) {
    bool close = false;
    for (const auto& q : pts) {
      const double dx = poly.xs[i] - to_double(q[0]);
      const double dy = poly.ys[i] - to_double(q[1]);
      if (std::hypot(dx, dy) <= snap) {
        close = true;
        break;
      }
    }
    if (!close)
      pts.push_back({rational_from_double(poly.xs[i]), rational_from_double(poly.ys[i])});
  }
  if (pts.empty()) return empty_plane_set();
  return polytope_from_points(std::move(pts), 2);
}

// Recursive split between neighboring bound directions: if the crossing of
// the two boundary lines pokes outside the bisecting direction's halfspace,
// the gap hides a kink worth another wall.
void refine_kinks(const std::function<WallRec(double)>& eval_at, const WallRec& a,
                  const WallRec& b, double tol, int depth, std::vector<WallRec>& out) {
  if (depth <= 0) return;
  const double gap = b.ang - a.ang;
  if (gap <= 2e-11) return;
  const double det = a.lambda[0] * b.lambda[1] - a.lambda[1] * b.lambda[0];
  if (det <= 1e-14) return;
  const double wx = (a.k * b.lambda[1] - b.k * a.lambda[1]) / det;
  const double wy = (a.lambda[0] * b.k - b.lambda[0] * a.k) / det;
  const double ang = a.ang + 0.5 * gap;
  WallRec mid = eval_at(ang);
  mid.ang = ang;
  out.push_back(mid);
  if (!mid.feasible) return;
  const double viol = mid.lambda[0] * wx + mid.lambda[1] * wy - mid.k;
  if (viol > tol) {
    refine_kinks(eval_at, a, mid, tol, depth - 1, out);
    refine_kinks(eval_at, mid, b, tol, depth - 1, out);
  }
}

// Shared tail of both sweeps: hunt kinks between angle-adjacent walls, then
// intersect everything. recs must keep exact walls in front so they win the
// clip credit over coincident sampled ones.
PayoffPolytope sweep_finish(std::vector<WallRec> recs,
                            const std::function<WallRec(double)>& eval_at,
                            const StageGame& game, double tol, double snap, int depth) {
  std::vector<std::size_t> idx(recs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return recs[a].ang < recs[b].ang; });
  std::vector<WallRec> extra;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const WallRec& a = recs[idx[i]];
    WallRec b = recs[idx[(i + 1) % idx.size()]];
    if (i + 1 == idx.size()) b.ang += 2.0 * kPi;
    refine_kinks(eval_at, a, b, tol, depth, extra);
  }
  for (const auto& rec : extra)
    if (!rec.feasible) return empty_plane_set();
  for (auto& rec : extra) recs.push_back(std::move(rec));
  return assemble(recs, game, snap);
}

PayoffPolytope sweep_pure(const StageGame& game, const MonitoringStructure& ms,
                          const LimitSetOptions& opts) {
  const std::size_t m = ms.num_joint_signals();
  std::vector<PureData> profs;
  profs.reserve(game.num_profiles());
  for (std::size_t a = 0; a < game.num_profiles(); ++a)
    profs.push_back(pure_profile_data(game, ms, a));
  const auto feasible = feasible_set(game);
  const double scale = std::max(1.0, game.max_abs_payoff());
  const std::function<WallRec(double)> eval_at = [&profs, m](double ang) {
    const auto [l0, l1] = small_direction(ang);
    WallRec rec = eval_pure_exact(profs, m, l0, l1);
    rec.ang = ang;
    return rec;
  };
  std::vector<WallRec> recs;
  for (const auto& [l0, l1] : critical_directions(profs, feasible, m)) {
    WallRec rec = eval_pure_exact(profs, m, l0, l1);
    if (!rec.feasible) return empty_plane_set();
    recs.push_back(std::move(rec));
  }
  std::vector<WallRec> fan(static_cast<std::size_t>(opts.directions));
  parallel_for(fan.size(), [&](std::size_t d) {
    fan[d] = eval_at(2.0 * kPi * static_cast<double>(d) / opts.directions);
  });
  for (auto& rec : fan) {
    if (!rec.feasible) return empty_plane_set();
    recs.push_back(std::move(rec));
  }
  const int depth = std::min(opts.max_rounds, 48);
  return sweep_finish(std::move(recs), eval_at, game, opts.tol * scale, opts.point_snap,
                      depth);
}

std::vector<std::vector<double>> player_weight_grid(int actions, int grid) {
  std::vector<std::vector<double>> out;
  if (actions == 1) {
    out.push_back({1.0});
    return out;
  }
  if (actions == 2) {
    for (int t = 0; t <= grid; ++t) {
      const double p = static_cast<double>(t) / grid;
      out.push_back({p, 1.0 - p});
    }
    return out;
  }
  // coarse simplex sweep for wider action spaces
  const int res = 8;
  std::vector<int> parts(actions, 0);
  auto emit = [&]() {
    std::vector<double> w(actions);
    for (int a = 0; a < actions; ++a) w[a] = static_cast<double>(parts[a]) / res;
    out.push_back(std::move(w));
  };
  // enumerate compositions of res into `actions` parts
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == actions - 1) {
      parts[slot] = left;
      emit();
      return;
    }
    for (int t = 0; t <= left; ++t) {
      parts[slot] = t;
      rec(slot + 1, left - t);
    }
  };
  rec(0, res);
  return out;
}

// Margin version of the level-line test for mixed kernels, numeric. The
// transfers must also keep every supported action tied to the path value
// (equality rows); gainful off-support deviations need positive slack.
// Returns the best worst-case slack, negative when the profile cannot hold.
double tangential_margin(const StageGame& game, std::size_t m, const ProfileKernel& ker,
                         const std::vector<double>& lambda) {
  const double t[2] = {-lambda[1], lambda[0]};
  LpProblem<double> p;
  p.num_vars = m + 1;
  p.nonneg.assign(m + 1, false);
  p.nonneg[m] = true;
  p.objective.assign(m + 1, 0.0);
  p.objective[m] = 1;
  {
    std::vector<double> cap(m + 1, 0.0);
    cap[m] = 1;
    p.add_row(std::move(cap), LpRel::Le, 1.0);
  }
  for (int i = 0; i < 2; ++i) {
    for (int ai = 0; ai < game.num_actions(i); ++ai) {
      std::vector<double> c(m + 1, 0.0);
      double mag = 0;
      for (std::size_t y = 0; y < m; ++y) {
        c[y] = (ker.dev[i][ai][y] - ker.pbar[y]) * t[i];
        mag = std::max(mag, std::abs(c[y]));
      }
      const double rhs = ker.g[i] - ker.dev_g[i][ai];
      if (mag < 1e-13 && std::abs(rhs) < 1e-13) continue;  // playing the profile itself
      if (ker.on[i][ai]) {
        p.add_row(std::move(c), LpRel::Eq, rhs);
      } else if (mag < 1e-13) {
        if (rhs < -1e-11) return -1.0;  // profitable and invisible
      } else if (std::abs(rhs) < 1e-13) {
        p.add_row(std::move(c), LpRel::Le, 0.0);
      } else {
        c[m] = 1;
        p.add_row(std::move(c), LpRel::Le, rhs);
      }
    }
  }
  const auto sol = solve_lp(p);
  return sol.status == LpStatus::Optimal ? sol.objective : -1.0;
}

struct MixedSweep {
  const StageGame* game = nullptr;
  const MonitoringStructure* ms = nullptr;
  std::size_t m = 0;
  std::vector<ProfileKernel> kernels;
  double scale = 1;
  bool zoom = false;  // both players binary: local mixture sharpening
  int grid = 24;
};

double mixed_value(const MixedSweep& ctx, const ProfileKernel& ker,
                   const std::vector<double>& lambda, bool budget) {
  if (budget) {
    const auto ks = score_kernel(*ctx.game, ctx.m, ker, lambda);
    return ks.feasible ? ks.score : kNegInf;
  }
  if (tangential_margin(*ctx.game, ctx.m, ker, lambda) <= 1e-9 * ctx.scale) return kNegInf;
  return dot(lambda, ker.g);
}

// Best bound across the mixture grid in one direction, then a local zoom:
// a shrinking window rescanned as a coarse plane. Near-tied grid optima can
// sit in separate basins of the mixture landscape (a pure corner can edge
// out the grid neighbour of a better interior peak), so the zoom restarts
// from every contender not already covered by an earlier start's window.
WallRec eval_mixed_dir(const MixedSweep& ctx, double ang) {
  WallRec rec;
  rec.ang = ang;
  rec.lambda = {std::cos(ang), std::sin(ang)};
  const bool budget = (rec.lambda[0] >= 0 && rec.lambda[1] >= 0) ||
                      (rec.lambda[0] <= 0 && rec.lambda[1] <= 0);
  std::vector<std::pair<double, int>> order(ctx.kernels.size());
  for (std::size_t i = 0; i < ctx.kernels.size(); ++i)
    order[i] = {dot(rec.lambda, ctx.kernels[i].g), static_cast<int>(i)};
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  const double gap = 0.05 * ctx.scale;  // basin contention band
  std::vector<std::pair<double, int>> evals;
  for (const auto& [bound, idx] : order) {
    if (rec.feasible && bound <= rec.k - gap) break;
    const double val = mixed_value(ctx, ctx.kernels[idx], rec.lambda, budget);
    if (val == kNegInf) continue;
    evals.emplace_back(val, idx);
    if (!rec.feasible || val > rec.k) {
      rec.feasible = true;
      rec.k = val;
      rec.best = idx;
    }
  }
  if (ctx.zoom && rec.feasible) {
    const double window0 = 1.5 / ctx.grid;
    std::sort(evals.begin(), evals.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    std::vector<std::pair<double, double>> starts;
    std::vector<double> start_vals;
    for (const auto& [val, idx] : evals) {
      if (val < rec.k - gap || starts.size() >= 4) break;
      const double w0 = ctx.kernels[idx].weights[0][0];
      const double w1 = ctx.kernels[idx].weights[1][0];
      bool covered = false;
      for (const auto& [s0, s1] : starts)
        if (std::abs(w0 - s0) <= window0 && std::abs(w1 - s1) <= window0) {
          covered = true;
          break;
        }
      if (covered) continue;
      starts.emplace_back(w0, w1);
      start_vals.push_back(val);
    }
    const int steps = 6;
    for (std::size_t s = 0; s < starts.size(); ++s) {
      double c0 = starts[s].first, c1 = starts[s].second;
      double lk = start_vals[s];  // climb within this basin, merge at the end
      double window = window0;
      for (int round = 0; round < 9; ++round) {
        double b0 = c0, b1 = c1;
        for (int i = -steps; i <= steps; ++i) {
          for (int j = -steps; j <= steps; ++j) {
            if (i == 0 && j == 0) continue;
            const double w0 = std::clamp(c0 + window * i / steps, 0.0, 1.0);
            const double w1 = std::clamp(c1 + window * j / steps, 0.0, 1.0);
            const auto ker =
                make_kernel(*ctx.game, *ctx.ms, {{w0, 1.0 - w0}, {w1, 1.0 - w1}});
            const double val = mixed_value(ctx, ker, rec.lambda, budget);
            if (val > lk) {
              lk = val;
              b0 = w0;
              b1 = w1;
            }
          }
        }
        c0 = b0;
        c1 = b1;
        window /= 3.0;
      }
      rec.k = std::max(rec.k, lk);
    }
  }
  return rec;
}

PayoffPolytope sweep_mixed(const StageGame& game, const MonitoringStructure& ms,
                           const LimitSetOptions& opts) {
  MixedSweep ctx;
  ctx.game = &game;
  ctx.ms = &ms;
  ctx.m = ms.num_joint_signals();
  ctx.scale = std::max(1.0, game.max_abs_payoff());
  ctx.zoom = game.num_actions(0) == 2 && game.num_actions(1) == 2;
  ctx.grid = opts.mixed_grid;
  const auto grid0 = player_weight_grid(game.num_actions(0), opts.mixed_grid);
  const auto grid1 = player_weight_grid(game.num_actions(1), opts.mixed_grid);
  ctx.kernels.reserve(grid0.size() * grid1.size());
  for (const auto& w0 : grid0)
    for (const auto& w1 : grid1) ctx.kernels.push_back(make_kernel(game, ms, {w0, w1}));
  std::vector<PureData> profs;
  profs.reserve(game.num_profiles());
  for (std::size_t a = 0; a < game.num_profiles(); ++a)
    profs.push_back(pure_profile_data(game, ms, a));
  const auto feasible = feasible_set(game);
  std::vector<double> angles;
  for (int d = 0; d < opts.mixed_directions; ++d)
    angles.push_back(2.0 * kPi * d / opts.mixed_directions);
  for (const auto& [l0, l1] : critical_directions(profs, feasible, ctx.m)) {
    double ang = std::atan2(to_double(l1), to_double(l0));
    if (ang < 0) ang += 2.0 * kPi;
    angles.push_back(ang);
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               angles.end());
  std::vector<WallRec> recs(angles.size());
  parallel_for(angles.size(), [&](std::size_t i) { recs[i] = eval_mixed_dir(ctx, angles[i]); });
  for (const auto& rec : recs)
    if (!rec.feasible) return empty_plane_set();
  const std::function<WallRec(double)> eval_at = [&ctx](double ang) {
    return eval_mixed_dir(ctx, ang);
  };
  const int depth = std::min(opts.max_rounds, 24);
  return sweep_finish(std::move(recs), eval_at, game, opts.mixed_tol * ctx.scale,
                      opts.point_snap, depth);
}

// ---- own-signal indifference programs ----

// Player's signal kernel by own action when the coordinate ignores everyone
// else; nullopt otherwise.
std::optional<RationalMatrix> own_kernel(const StageGame& game, const MonitoringStructure& ms,
                                         int player) {
  if (ms.kind == MonitoringKind::PublicProduct) return ms.factors[player];
  if (ms.kind != MonitoringKind::Private) return std::nullopt;
  RationalMatrix rows(game.num_actions(player));
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    const int ai = ms.profile_component(a, player);
    const auto& row = ms.factors[player][a];
    if (rows[ai].empty())
      rows[ai] = row;
    else if (rows[ai] != row)
      return std::nullopt;
  }
  return rows;
}

bool product_form(const StageGame& game, const MonitoringStructure& ms) {
  for (int i = 0; i < game.num_players(); ++i)
    if (!own_kernel(game, ms, i)) return false;
  return true;
}

struct MiCandidate {
  bool feasible = false;
  Rational value;
  RationalVector transfers;
};

// Exact program: min g_player + E[x] over nonnegative own-signal transfers
// deterring every stage deviation.
MiCandidate mi_candidate_value(const StageGame& game, const RationalMatrix& kernel, int player,
                               const MixedProfile& prof) {
  const int acts = game.num_actions(player);
  const std::size_t yi = kernel[0].size();
  RationalVector pbar(yi, Rational(0));
  const auto& w = prof.actions[player].weights;
  for (int ai = 0; ai < acts; ++ai) {
    if (w[ai] == 0) continue;
    for (std::size_t y = 0; y < yi; ++y) pbar[y] += w[ai] * kernel[ai][y];
  }
  const Rational gval = expected_reward(game, prof)[player];
  LpProblem<Rational> p;
  p.num_vars = yi;
  p.nonneg.assign(yi, true);
  p.objective.assign(yi, Rational(0));
  for (std::size_t y = 0; y < yi; ++y) p.objective[y] = -pbar[y];
  for (int ai = 0; ai < acts; ++ai) {
    RationalVector c(yi, Rational(0));
    bool nonzero = false;
    for (std::size_t y = 0; y < yi; ++y) {
      c[y] = pbar[y] - kernel[ai][y];
      if (c[y] != 0) nonzero = true;
    }
    const Rational rhs = deviation_reward(game, player, ai, prof) - gval;
    if (!nonzero) {
      if (rhs > 0) return {};  // undeterrable profitable deviation
      continue;
    }
    p.add_row(std::move(c), LpRel::Ge, rhs);
  }
  const auto sol = solve_lp(p);
  MiCandidate out;
  if (sol.status == LpStatus::Infeasible) return out;
  BW_ASSERT(sol.status == LpStatus::Optimal,
            "nonnegative transfers bound the punishment value from below");
  out.feasible = true;
  out.value = gval - sol.objective;
  out.transfers = sol.x;
  return out;
}

// Representative plus factor-endpoint combinations of a profile family.
std::vector<MixedProfile> sample_cell(const StageGame& game, const MiCell& cell,
                                      std::size_t cap) {
  std::vector<MixedProfile> out;
  out.push_back(cell.representative);
  const int n = game.num_players();
  std::vector<std::vector<int>> sup(n);
  std::vector<std::vector<RationalVector>> options(n);
  for (int i = 0; i < n; ++i) {
    sup[i] = cell.support.supports[i];
    RationalVector rep;
    for (int a : sup[i]) rep.push_back(cell.representative.actions[i].weights[a]);
    options[i] = {std::move(rep)};
  }
  for (const auto& f : cell.factors) {
    if (f.player < 0 || f.player >= n) continue;
    if (f.dim == 0 && !f.point.empty()) {
      sup[f.player] = f.support;
      options[f.player] = {f.point};
    } else if (!f.vertices.empty()) {
      sup[f.player] = f.support;
      options[f.player] = f.vertices;
    }
  }
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    MixedProfile prof = cell.representative;
    for (int i = 0; i < n; ++i) {
      RationalVector wfull(game.num_actions(i), Rational(0));
      for (std::size_t k = 0; k < sup[i].size(); ++k)
        wfull[sup[i][k]] = options[i][idx[i]][k];
      prof.actions[i].weights = std::move(wfull);
    }
    out.push_back(std::move(prof));
    if (out.size() >= cap) break;
    int pos = n - 1;
    while (pos >= 0) {
      if (++idx[static_cast<std::size_t>(pos)] < options[static_cast<std::size_t>(pos)].size())
        break;
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

// Sharpens the best value over a profile family: seeds from the sampled
// corners, then slides along each segment-shaped factor with a golden
// search, finally snapping the argmax to nearby small-denominator weights.
// Parametric program optima sit at basis-change kinks with simple rational
// coordinates, so the snap usually recovers them exactly; that keeps the
// two punishment programs (full-signal and own-signal) in numeric lockstep.
// `eval` returns the value to maximize, or nullopt when unenforceable, and
// does its own bookkeeping of the winning profile.
void slide_cell(const StageGame& game, const MiCell& cell,
                const std::function<std::optional<double>(const MixedProfile&)>& eval) {
  double best = kNegInf;
  MixedProfile current;
  for (const auto& prof : sample_cell(game, cell, 64)) {
    const auto v = eval(prof);
    if (v && *v > best) {
      best = *v;
      current = prof;
    }
  }
  if (best == kNegInf) return;
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (const auto& f : cell.factors) {
      if (f.dim != 1 || f.vertices.size() != 2) continue;
      auto profile_at = [&](const Rational& t) {
        MixedProfile prof = current;
        RationalVector wfull(game.num_actions(f.player), Rational(0));
        for (std::size_t k = 0; k < f.support.size(); ++k)
          wfull[f.support[k]] = f.vertices[0][k] + t * (f.vertices[1][k] - f.vertices[0][k]);
        prof.actions[f.player].weights = std::move(wfull);
        return prof;
      };
      auto value_at = [&](double td) {
        const Rational t = rational_from_double(std::min(1.0, std::max(0.0, td)));
        const auto v = eval(profile_at(t));
        return v ? *v : kNegInf;
      };
      auto [arg, val] = golden_max(value_at, 0.0, 1.0, 1e-6);
      if (val == kNegInf) continue;
      Rational t_best = rational_from_double(std::min(1.0, std::max(0.0, arg)));
      for (long long den : {16LL, 256LL, 4096LL}) {
        const auto [num, d] = cf_approx(arg, den);
        if (d <= 0) continue;
        Rational t(num, d);
        if (t < 0) t = Rational(0);
        if (t > 1) t = Rational(1);
        const auto v = eval(profile_at(t));
        if (v && *v > val) {
          val = *v;
          t_best = t;
        }
      }
      if (val > best) {
        best = val;
        current = profile_at(t_best);
      }
    }
  }
}

}  // namespace

ScoreResult fl_score(const StageGame& game, const MonitoringStructure& ms,
                     const std::vector<double>& direction, const MixedProfile& profile) {
  ms.validate(game);
  require_public(ms);
  BW_REQUIRE(direction.size() == static_cast<std::size_t>(game.num_players()),
             "direction length must match the player count");
  double norm = 0;
  for (double t : direction) norm += t * t;
  BW_REQUIRE(norm > 0, "direction must be nonzero");
  validate_mixed_profile(game, profile);
  const std::size_t m = ms.num_joint_signals();
  const auto ker = make_kernel(game, ms, profile.weights_d());
  const auto ks = score_kernel(game, m, ker, direction);
  return package_score(game, m, direction, profile, ker, ks);
}

PayoffPolytope limit_set_pure(const StageGame& game, const MonitoringStructure& ms,
                              const LimitSetOptions& options) {
  ms.validate(game);
  require_public(ms);
  BW_REQUIRE(game.num_players() == 2, "limit sets are computed for two-player games");
  BW_REQUIRE(options.directions >= 8, "need at least eight directions");
  return sweep_pure(game, ms, options);
}

PayoffPolytope limit_set_mixed(const StageGame& game, const MonitoringStructure& ms,
                               const LimitSetOptions& options) {
  ms.validate(game);
  require_public(ms);
  BW_REQUIRE(game.num_players() == 2, "limit sets are computed for two-player games");
  BW_REQUIRE(options.mixed_directions >= 8, "need at least eight directions");
  BW_REQUIRE(options.mixed_grid >= 2, "mixture grid needs at least two steps");
  return sweep_mixed(game, ms, options);
}

MiMinmaxResult mi_prd_minmax(const StageGame& game, const MonitoringStructure& ms, int player) {
  ms.validate(game);
  BW_REQUIRE(player >= 0 && player < game.num_players(), "player index out of range");
  BW_DOMAIN(product_form(game, ms),
            "own-signal punishment needs product-form monitoring (each signal "
            "coordinate driven by the own action alone); use mi_score for "
            "general public monitoring");
  const auto kernel = *own_kernel(game, ms, player);
  const auto set = enumerate_mi_profiles(game);
  MiMinmaxResult out;
  out.player = player;
  std::optional<Rational> best;
  MixedProfile best_prof;
  RationalVector best_x;
  auto consider = [&](const MixedProfile& prof) -> std::optional<Rational> {
    const auto cand = mi_candidate_value(game, kernel, player, prof);
    if (!cand.feasible) return std::nullopt;
    if (!best || cand.value < *best) {
      best = cand.value;
      best_prof = prof;
      best_x = cand.transfers;
    }
    return cand.value;
  };
  for (const auto& prof : set.members) consider(prof);
  for (const auto& cell : set.cells)
    slide_cell(game, cell, [&](const MixedProfile& prof) -> std::optional<double> {
      const auto v = consider(prof);
      if (!v) return std::nullopt;
      return -to_double(*v);  // maximize the negation
    });
  BW_DOMAIN(best.has_value(),
            "no myopically indifferent profile is enforceable through the "
            "player's own signal");
  out.exact_value = *best;
  out.value = to_double(*best);
  out.witness = best_prof;
  out.transfers = to_double_vec(best_x);
  out.exact = set.finite() && set.complete;
  std::string note = set.note;
  if (!set.finite()) {
    if (!note.empty()) note += "; ";
    note += "indifference families sampled at representatives, endpoints, and line searches";
  }
  out.note = note;
  return out;
}

ScoreResult mi_score(const StageGame& game, const MonitoringStructure& ms,
                     const std::vector<double>& direction) {
  ms.validate(game);
  require_public(ms);
  BW_REQUIRE(direction.size() == static_cast<std::size_t>(game.num_players()),
             "direction length must match the player count");
  double norm = 0;
  for (double t : direction) norm += t * t;
  BW_REQUIRE(norm > 0, "direction must be nonzero");
  const std::size_t m = ms.num_joint_signals();
  const auto set = enumerate_mi_profiles(game);
  ScoreResult best;
  best.direction = direction;
  MixedProfile best_prof;
  ProfileKernel best_ker;
  KernelScore best_ks;
  auto consider = [&](const MixedProfile& prof) -> std::optional<double> {
    auto ker = make_kernel(game, ms, prof.weights_d());
    auto ks = score_kernel(game, m, ker, direction);
    if (!ks.feasible) return std::nullopt;
    const double here = ks.score;
    if (!best.feasible || ks.score > best.score) {
      best.feasible = true;
      best.score = ks.score;
      best_prof = prof;
      best_ker = std::move(ker);
      best_ks = std::move(ks);
    }
    return here;
  };
  for (const auto& prof : set.members) consider(prof);
  for (const auto& cell : set.cells)
    slide_cell(game, cell, [&](const MixedProfile& prof) { return consider(prof); });
  std::string note = set.note;
  if (!set.finite()) {
    best.exact = false;
    if (!note.empty()) note += "; ";
    note += "indifference families sampled at representatives, endpoints, and line searches";
  }
  if (!set.complete) best.exact = false;
  best.note = note;
  if (best.feasible) {
    check_witness(game, m, direction, best_ker, best_ks);
    best.witness.profile = best_prof;
    best.witness.transfers = best_ks.x;
    best.witness.value = best_ks.v;
  }
  return best;
}

BoundedSets bounded_sets(const StageGame& game, const MonitoringStructure& ms) {
  ms.validate(game);
  BoundedSets out;
  const auto feasible = feasible_set(game);
  const auto pure = minmax(game, MinmaxNotion::Pure);
  const auto worst = minmax(game, MinmaxNotion::NashWorst);
  const int n = game.num_players();
  out.f_star_floors.resize(n);
  for (int i = 0; i < n; ++i)
    out.f_star_floors[i] = std::min(pure.values[i], worst.values[i]);
  out.f_star_exact = pure.exact && worst.exact;
  out.f_star = clip_below(feasible, out.f_star_floors);
  if (product_form(game, ms)) {
    out.f_mi_floors.resize(n);
    for (int i = 0; i < n; ++i) {
      const auto r = mi_prd_minmax(game, ms, i);
      out.f_mi_floors[i] = r.exact_value ? *r.exact_value : rational_from_double(r.value);
      out.f_mi_exact = out.f_mi_exact && r.exact;
      if (!r.note.empty() && out.note.empty()) out.note = r.note;
    }
  } else {
    const auto mi = minmax(game, MinmaxNotion::MyopicIndifferent);
    out.f_mi_floors = mi.values;
    out.f_mi_exact = mi.exact;
    out.note =
        "monitoring is not product-form; stage indifference floors stand in "
        "for the own-signal benchmark";
  }
  out.f_mi = clip_below(feasible, out.f_mi_floors);
  return out;
}

}  // namespace blackwell
