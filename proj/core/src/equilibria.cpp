#include "blackwell/equilibria.hpp"

#include <algorithm>
#include <limits>

#include "blackwell/errors.hpp"
#include "blackwell/linalg.hpp"
#include "blackwell/lp.hpp"

namespace blackwell {

namespace {

std::vector<std::vector<int>> all_supports(int num_actions) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << num_actions); ++mask) {
    std::vector<int> s;
    for (int a = 0; a < num_actions; ++a) {
      if (mask & (1u << a)) s.push_back(a);
    }
    out.push_back(std::move(s));
  }
  return out;
}

MixedAction action_from_support(int num_actions, const std::vector<int>& support,
                                const RationalVector& coords) {
  MixedAction act;
  act.weights.assign(num_actions, Rational(0));
  for (std::size_t k = 0; k < support.size(); ++k) {
    act.weights[support[k]] = coords[k];
  }
  return act;
}

// Indifference rows for `constrainer` across own support, as linear
// constraints on the mixer's support weights (two-player only).
void indifference_rows(const StageGame& game, int constrainer,
                       const std::vector<int>& constrainer_support, int mixer,
                       const std::vector<int>& mixer_support,
                       RationalMatrix& rows, RationalVector& rhs) {
  for (std::size_t k = 0; k + 1 < constrainer_support.size(); ++k) {
    RationalVector row;
    for (int b : mixer_support) {
      std::vector<int> pa(2), pb(2);
      pa[constrainer] = constrainer_support[k];
      pa[mixer] = b;
      pb[constrainer] = constrainer_support[k + 1];
      pb[mixer] = b;
      row.push_back(game.payoff(game.profile_index(pa), constrainer) -
                    game.payoff(game.profile_index(pb), constrainer));
    }
    rows.push_back(std::move(row));
    rhs.push_back(Rational(0));
  }
}

// Relative-interior point of {w >= 0 componentwise strictly, rows w = rhs,
// sum w = 1}, found by maximizing the smallest coordinate.
std::optional<RationalVector> strict_interior(const RationalMatrix& rows,
                                              const RationalVector& rhs,
                                              std::size_t k) {
  LpProblem<Rational> p;
  p.num_vars = k + 1;  // w then t
  p.objective.assign(k + 1, Rational(0));
  p.objective[k] = Rational(1);
  p.nonneg.assign(k + 1, true);
  p.nonneg[k] = false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    RationalVector c = rows[r];
    c.push_back(Rational(0));
    p.add_row(c, LpRel::Eq, rhs[r]);
  }
  RationalVector ones(k, Rational(1));
  ones.push_back(Rational(0));
  p.add_row(ones, LpRel::Eq, Rational(1));
  for (std::size_t b = 0; b < k; ++b) {
    RationalVector c(k + 1, Rational(0));
    c[b] = Rational(1);
    c[k] = Rational(-1);
    p.add_row(c, LpRel::Ge, Rational(0));
  }
  auto sol = solve_lp(p);
  if (sol.status != LpStatus::Optimal || sol.objective <= 0) return std::nullopt;
  RationalVector w(sol.x.begin(), sol.x.begin() + k);
  return w;
}

// Builds the factor polytope for `mixer` under `constrainer`'s indifference.
// Requires the relative interior to be nonempty (exact-support families).
std::optional<MiCellFactor> solve_factor(const StageGame& game, int constrainer,
                                         const std::vector<int>& constrainer_support,
                                         int mixer,
                                         const std::vector<int>& mixer_support) {
  std::size_t k = mixer_support.size();
  MiCellFactor f;
  f.player = mixer;
  f.support = mixer_support;
  indifference_rows(game, constrainer, constrainer_support, mixer, mixer_support,
                    f.rows, f.rhs);

  RationalMatrix sys = f.rows;
  RationalVector sysrhs = f.rhs;
  sys.push_back(RationalVector(k, Rational(1)));
  sysrhs.push_back(Rational(1));
  auto sol = solve_linear(sys, sysrhs);
  if (!sol.consistent) return std::nullopt;
  f.dim = static_cast<int>(sol.kernel.size());
  if (f.dim == 0) {
    for (const auto& w : sol.particular) {
      if (w <= 0) return std::nullopt;
    }
    f.point = sol.particular;
    return f;
  }
  auto interior = strict_interior(f.rows, f.rhs, k);
  if (!interior) return std::nullopt;
  f.point = *interior;
  if (f.dim == 1) {
    // Segment endpoints: walk the kernel direction until a weight hits zero.
    const RationalVector& d = sol.kernel[0];
    bool has_hi = false, has_lo = false;
    Rational hi(0), lo(0);
    for (std::size_t b = 0; b < k; ++b) {
      if (d[b] < 0) {
        Rational bound = f.point[b] / -d[b];
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      } else if (d[b] > 0) {
        Rational bound = -f.point[b] / d[b];
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      }
    }
    BW_ASSERT(has_hi && has_lo, "simplex segment must be bounded");
    RationalVector v1(k), v2(k);
    for (std::size_t b = 0; b < k; ++b) {
      v1[b] = f.point[b] + lo * d[b];
      v2[b] = f.point[b] + hi * d[b];
    }
    f.vertices = {v1, v2};
  }
  return f;
}

Rational support_payoff(const StageGame& game, int player,
                        const std::vector<int>& own_support, int mixer,
                        const RationalVector& mixer_coords,
                        const std::vector<int>& mixer_support) {
  // Common on-support payoff: evaluate at the first supported action.
  std::vector<int> pa(2);
  pa[player] = own_support.front();
  Rational v(0);
  for (std::size_t b = 0; b < mixer_support.size(); ++b) {
    pa[mixer] = mixer_support[b];
    v += mixer_coords[b] * game.payoff(game.profile_index(pa), player);
  }
  return v;
}

// Payoff to `player` from playing `action` against the mixer's coords.
Rational response_payoff(const StageGame& game, int player, int action,
                         int mixer, const RationalVector& mixer_coords,
                         const std::vector<int>& mixer_support) {
  std::vector<int> pa(2);
  pa[player] = action;
  Rational v(0);
  for (std::size_t b = 0; b < mixer_support.size(); ++b) {
    pa[mixer] = mixer_support[b];
    v += mixer_coords[b] * game.payoff(game.profile_index(pa), player);
  }
  return v;
}

}  // namespace

int MiCell::dim() const {
  int d = 0;
  for (const auto& f : factors) d += f.dim;
  return d;
}

bool MiProfileSet::equals_all_pure(const StageGame& game) const {
  if (!cells.empty()) return false;
  if (members.size() != game.num_profiles()) return false;
  return std::all_of(members.begin(), members.end(),
                     [](const MixedProfile& m) { return m.is_pure(); });
}

bool is_myopically_indifferent(const StageGame& game, const MixedProfile& profile) {
  validate_mixed_profile(game, profile);
  for (int i = 0; i < game.num_players(); ++i) {
    auto support = profile.actions[i].support();
    Rational ref = deviation_reward(game, i, support.front(), profile);
    for (std::size_t k = 1; k < support.size(); ++k) {
      if (deviation_reward(game, i, support[k], profile) != ref) return false;
    }
  }
  return true;
}

bool is_stage_nash(const StageGame& game, const MixedProfile& profile) {
  validate_mixed_profile(game, profile);
  for (int i = 0; i < game.num_players(); ++i) {
    auto support = profile.actions[i].support();
    Rational ref = deviation_reward(game, i, support.front(), profile);
    for (std::size_t k = 1; k < support.size(); ++k) {
      if (deviation_reward(game, i, support[k], profile) != ref) return false;
    }
    for (int a = 0; a < game.num_actions(i); ++a) {
      if (deviation_reward(game, i, a, profile) > ref) return false;
    }
  }
  return true;
}

MiProfileSet enumerate_mi_profiles(const StageGame& game) {
  MiProfileSet out;
  int n = game.num_players();
  if (n == 2) {
    auto s1 = all_supports(game.num_actions(0));
    auto s2 = all_supports(game.num_actions(1));
    for (const auto& a_sup : s1) {
      for (const auto& b_sup : s2) {
        auto f2 = solve_factor(game, 0, a_sup, 1, b_sup);
        if (!f2) continue;
        auto f1 = solve_factor(game, 1, b_sup, 0, a_sup);
        if (!f1) continue;
        MixedProfile rep{{action_from_support(game.num_actions(0), a_sup, f1->point),
                          action_from_support(game.num_actions(1), b_sup, f2->point)}};
        if (f1->dim == 0 && f2->dim == 0) {
          out.members.push_back(std::move(rep));
        } else {
          MiCell cell;
          cell.support = SupportProfile{{a_sup, b_sup}};
          cell.factors = {*f1, *f2};
          cell.representative = std::move(rep);
          out.cells.push_back(std::move(cell));
        }
      }
    }
    return out;
  }

  // Three or more players: pure profiles are always present; one-mixer
  // families stay linear, so they are enumerated too. Supports with several
  // mixing players lead to polynomial systems and are skipped loudly.
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    out.members.push_back(MixedProfile::pure(game.profile_actions(a), game));
  }
  int rich_players = 0;
  for (int i = 0; i < n; ++i) rich_players += game.num_actions(i) >= 2 ? 1 : 0;
  if (rich_players >= 2) {
    out.complete = false;
    out.note = "supports with two or more mixing players were not searched";
  }
  for (int k = 0; k < n; ++k) {
    for (const auto& sup : all_supports(game.num_actions(k))) {
      if (sup.size() < 2) continue;
      // Others pure: iterate their joint pure profiles.
      std::vector<int> others;
      for (int j = 0; j < n; ++j) {
        if (j != k) others.push_back(j);
      }
      std::vector<int> idx(others.size(), 0);
      while (true) {
        std::vector<int> actions(n, 0);
        for (std::size_t o = 0; o < others.size(); ++o) actions[others[o]] = idx[o];
        actions[k] = sup[0];
        Rational ref = game.payoff(game.profile_index(actions), k);
        bool indifferent = true;
        for (std::size_t s = 1; s < sup.size() && indifferent; ++s) {
          actions[k] = sup[s];
          indifferent = game.payoff(game.profile_index(actions), k) == ref;
        }
        if (indifferent) {
          MiCell cell;
          cell.support.supports.assign(n, {});
          std::vector<MixedAction> acts(n);
          for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            cell.support.supports[j] = {actions[j]};
            acts[j] = MixedAction::pure(actions[j], game.num_actions(j));
          }
          cell.support.supports[k] = sup;
          MiCellFactor fk;
          fk.player = k;
          fk.support = sup;
          fk.dim = static_cast<int>(sup.size()) - 1;
          fk.point.assign(sup.size(), Rational(1, static_cast<long>(sup.size())));
          if (sup.size() == 2) {
            fk.vertices = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
          }
          acts[k] = action_from_support(game.num_actions(k), sup, fk.point);
          cell.factors.push_back(fk);
          cell.representative = MixedProfile{std::move(acts)};
          out.cells.push_back(std::move(cell));
        }
        // Advance the odometer over the others' actions.
        bool done = others.empty();
        std::size_t o = others.size();
        while (o > 0) {
          --o;
          if (++idx[o] < game.num_actions(others[o])) break;
          idx[o] = 0;
          if (o == 0) done = true;
        }
        if (done) break;
      }
    }
  }
  return out;
}

namespace {

struct SegmentRange {
  // Parametrized points w = base + s * dir for s in [lo, hi].
  Rational lo, hi;
  bool empty = false;
};

// Clips the exact-support parameter range of a one-dimensional factor by the
// best-response inequalities rows . w <= 0.
SegmentRange clip_segment(const MiCellFactor& f, const RationalMatrix& br_rows) {
  BW_ASSERT(f.dim == 1 && f.vertices.size() == 2, "segment factor expected");
  SegmentRange r;
  r.lo = Rational(0);
  r.hi = Rational(1);  // parametrize between the two endpoints
  for (const auto& row : br_rows) {
    // row . (v1 + s (v2 - v1)) <= 0
    Rational at0(0), at1(0);
    for (std::size_t b = 0; b < row.size(); ++b) {
      at0 += row[b] * f.vertices[0][b];
      at1 += row[b] * f.vertices[1][b];
    }
    Rational slope = at1 - at0;
    if (slope == 0) {
      if (at0 > 0) {
        r.empty = true;
        return r;
      }
      continue;
    }
    Rational cross = -at0 / slope;
    if (slope > 0) {
      r.hi = std::min(r.hi, cross);
    } else {
      r.lo = std::max(r.lo, cross);
    }
  }
  if (r.lo > r.hi) r.empty = true;
  return r;
}

RationalVector segment_point(const MiCellFactor& f, const Rational& s) {
  RationalVector w(f.vertices[0].size());
  for (std::size_t b = 0; b < w.size(); ++b) {
    w[b] = f.vertices[0][b] + s * (f.vertices[1][b] - f.vertices[0][b]);
  }
  return w;
}

// Best-response inequality rows for `player` against the mixer: for each
// off-support action a, (g(a, .) - g(ref, .)) . w <= 0.
RationalMatrix br_rows_against(const StageGame& game, int player,
                               const std::vector<int>& own_support, int mixer,
                               const std::vector<int>& mixer_support) {
  RationalMatrix rows;
  int ref = own_support.front();
  for (int a = 0; a < game.num_actions(player); ++a) {
    if (std::find(own_support.begin(), own_support.end(), a) != own_support.end()) {
      continue;
    }
    RationalVector row;
    for (int b : mixer_support) {
      std::vector<int> pa(2), pr(2);
      pa[player] = a;
      pa[mixer] = b;
      pr[player] = ref;
      pr[mixer] = b;
      row.push_back(game.payoff(game.profile_index(pa), player) -
                    game.payoff(game.profile_index(pr), player));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool rows_hold_at(const RationalMatrix& rows, const RationalVector& w) {
  for (const auto& row : rows) {
    Rational v(0);
    for (std::size_t b = 0; b < row.size(); ++b) v += row[b] * w[b];
    if (v > 0) return false;
  }
  return true;
}

// Region of a factor surviving the best-response rows, described either as a
// point, a parameter interval of a segment, or via an interior LP for
// higher-dimensional factors.
struct FactorRegion {
  bool empty = true;
  bool is_point = false;
  RationalVector point;            // valid when is_point
  bool is_segment = false;
  SegmentRange range;              // valid when is_segment
  bool higher_dim = false;         // dim >= 2 and nonempty interior
  RationalVector interior;         // valid when higher_dim
};

FactorRegion nash_region(const StageGame& game, const MiCellFactor& f,
                         int opponent, const std::vector<int>& opp_support) {
  auto br = br_rows_against(game, opponent, opp_support, f.player, f.support);
  FactorRegion r;
  if (f.dim == 0) {
    if (rows_hold_at(br, f.point)) {
      r.empty = false;
      r.is_point = true;
      r.point = f.point;
    }
    return r;
  }
  if (f.dim == 1) {
    auto range = clip_segment(f, br);
    if (range.empty) return r;
    r.empty = false;
    if (range.lo == range.hi) {
      // Pinned to one mixture: isolated if weights stay strictly positive.
      auto w = segment_point(f, range.lo);
      bool strict = std::all_of(w.begin(), w.end(),
                                [](const Rational& x) { return x > 0; });
      if (!strict) {
        r.empty = true;  // lives in a smaller support class
        return r;
      }
      r.is_point = true;
      r.point = std::move(w);
      return r;
    }
    // A nondegenerate parameter interval keeps interior points with every
    // supported weight strictly positive, so this is a genuine continuum.
    r.is_segment = true;
    r.range = range;
    return r;
  }
  // dim >= 2: interior LP with the BR rows folded in as inequalities.
  LpProblem<Rational> p;
  std::size_t k = f.support.size();
  p.num_vars = k + 1;
  p.objective.assign(k + 1, Rational(0));
  p.objective[k] = Rational(1);
  p.nonneg.assign(k + 1, true);
  p.nonneg[k] = false;
  for (std::size_t rr = 0; rr < f.rows.size(); ++rr) {
    RationalVector c = f.rows[rr];
    c.push_back(Rational(0));
    p.add_row(c, LpRel::Eq, f.rhs[rr]);
  }
  RationalVector ones(k, Rational(1));
  ones.push_back(Rational(0));
  p.add_row(ones, LpRel::Eq, Rational(1));
  for (std::size_t b = 0; b < k; ++b) {
    RationalVector c(k + 1, Rational(0));
    c[b] = Rational(1);
    c[k] = Rational(-1);
    p.add_row(c, LpRel::Ge, Rational(0));
  }
  for (const auto& row : br) {
    RationalVector c = row;
    c.push_back(Rational(0));
    p.add_row(c, LpRel::Le, Rational(0));
  }
  auto sol = solve_lp(p);
  if (sol.status == LpStatus::Optimal && sol.objective > 0) {
    r.empty = false;
    r.higher_dim = true;
    r.interior.assign(sol.x.begin(), sol.x.begin() + k);
  }
  return r;
}

}  // namespace

NashEnumeration enumerate_stage_nash(const StageGame& game) {
  NashEnumeration out;
  int n = game.num_players();
  if (n != 2) {
    for (std::size_t a = 0; a < game.num_profiles(); ++a) {
      auto profile = MixedProfile::pure(game.profile_actions(a), game);
      if (is_stage_nash(game, profile)) {
        out.payoffs.push_back(expected_reward(game, profile));
        out.equilibria.push_back(std::move(profile));
      }
    }
    out.complete = true;
    for (int i = 0; i < n; ++i) {
      if (game.num_actions(i) >= 2) {
        out.complete = false;
        out.note = "mixed equilibria not searched beyond two players";
        break;
      }
    }
    return out;
  }

  auto s1 = all_supports(game.num_actions(0));
  auto s2 = all_supports(game.num_actions(1));
  for (const auto& a_sup : s1) {
    for (const auto& b_sup : s2) {
      auto f2 = solve_factor(game, 0, a_sup, 1, b_sup);
      if (!f2) continue;
      auto f1 = solve_factor(game, 1, b_sup, 0, a_sup);
      if (!f1) continue;
      // Player 0's best responses constrain the opponent factor and vice
      // versa, so the two regions clip independently.
      auto r2 = nash_region(game, *f2, 0, a_sup);
      if (r2.empty) continue;
      auto r1 = nash_region(game, *f1, 1, b_sup);
      if (r1.empty) continue;

      auto coords1 = r1.is_point ? r1.point
                     : r1.is_segment
                         ? segment_point(*f1, (r1.range.lo + r1.range.hi) / 2)
                         : r1.interior;
      auto coords2 = r2.is_point ? r2.point
                     : r2.is_segment
                         ? segment_point(*f2, (r2.range.lo + r2.range.hi) / 2)
                         : r2.interior;
      MixedProfile rep{{action_from_support(game.num_actions(0), a_sup, coords1),
                        action_from_support(game.num_actions(1), b_sup, coords2)}};
      if (r1.is_point && r2.is_point) {
        out.payoffs.push_back(expected_reward(game, rep));
        out.equilibria.push_back(std::move(rep));
      } else {
        out.degenerate = true;
        out.degenerate_supports.push_back(SupportProfile{{a_sup, b_sup}});
        out.degenerate_representatives.push_back(std::move(rep));
      }
    }
  }
  if (out.degenerate) {
    out.note = "equilibrium continua found; isolated list is not exhaustive of them";
  }
  return out;
}

namespace {

MinmaxResult pure_minmax(const StageGame& game) {
  MinmaxResult res;
  res.notion = MinmaxNotion::Pure;
  int n = game.num_players();
  for (int i = 0; i < n; ++i) {
    bool first = true;
    Rational best(0);
    std::vector<int> best_profile;
    // Iterate all profiles; group by the others' actions via max over a_i.
    // Profile count is small, so scan others' combinations directly.
    std::vector<int> actions(n, 0);
    std::vector<int> others;
    for (int j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    std::vector<int> idx(others.size(), 0);
    while (true) {
      for (std::size_t o = 0; o < others.size(); ++o) actions[others[o]] = idx[o];
      Rational response(0);
      int best_a = 0;
      for (int a = 0; a < game.num_actions(i); ++a) {
        actions[i] = a;
        Rational v = game.payoff(game.profile_index(actions), i);
        if (a == 0 || v > response) {
          response = v;
          best_a = a;
        }
      }
      if (first || response < best) {
        best = response;
        actions[i] = best_a;
        best_profile = actions;
        first = false;
      }
      std::size_t o = others.size();
      bool done = others.empty();
      while (o > 0) {
        --o;
        if (++idx[o] < game.num_actions(others[o])) break;
        idx[o] = 0;
        if (o == 0) done = true;
      }
      if (done) break;
    }
    res.values.push_back(best);
    res.values_d.push_back(to_double(best));
    res.witnesses.push_back(MixedProfile::pure(best_profile, game));
  }
  return res;
}

// Exact randomized minmax for two players: linear program over the
// opponent's full simplex.
MinmaxResult standard_minmax_2p(const StageGame& game) {
  MinmaxResult res;
  res.notion = MinmaxNotion::Standard;
  for (int i = 0; i < 2; ++i) {
    int j = 1 - i;
    std::size_t k = game.num_actions(j);
    LpProblem<Rational> p;
    p.num_vars = k + 1;  // w, t
    p.objective.assign(k + 1, Rational(0));
    p.objective[k] = Rational(-1);  // maximize -t == minimize t
    p.nonneg.assign(k + 1, true);
    p.nonneg[k] = false;
    for (int a = 0; a < game.num_actions(i); ++a) {
      RationalVector c(k + 1, Rational(0));
      for (std::size_t b = 0; b < k; ++b) {
        std::vector<int> pa(2);
        pa[i] = a;
        pa[j] = static_cast<int>(b);
        c[b] = -game.payoff(game.profile_index(pa), i);
      }
      c[k] = Rational(1);
      p.add_row(c, LpRel::Ge, Rational(0));
    }
    RationalVector ones(k + 1, Rational(1));
    ones[k] = Rational(0);
    p.add_row(ones, LpRel::Eq, Rational(1));
    auto sol = solve_lp(p);
    BW_ASSERT(sol.status == LpStatus::Optimal, "minmax LP must be solvable");
    Rational value = sol.x[k];
    res.values.push_back(value);
    res.values_d.push_back(to_double(value));
    // Witness: opponent mixture and a best response for the punished player.
    RationalVector w(sol.x.begin(), sol.x.begin() + k);
    int best_a = 0;
    Rational best_v(0);
    for (int a = 0; a < game.num_actions(i); ++a) {
      Rational v(0);
      for (std::size_t b = 0; b < k; ++b) {
        std::vector<int> pa(2);
        pa[i] = a;
        pa[j] = static_cast<int>(b);
        v += w[b] * game.payoff(game.profile_index(pa), i);
      }
      if (a == 0 || v > best_v) {
        best_v = v;
        best_a = a;
      }
    }
    std::vector<MixedAction> acts(2);
    acts[i] = MixedAction::pure(best_a, game.num_actions(i));
    acts[j] = MixedAction{w};
    res.witnesses.push_back(MixedProfile{std::move(acts)});
  }
  return res;
}

// Approximate randomized minmax for three or more players: coordinate
// descent over opponents' mixtures from several deterministic starts.
MinmaxResult standard_minmax_np(const StageGame& game) {
  MinmaxResult res;
  res.notion = MinmaxNotion::Standard;
  res.exact = false;
  res.note = "independent-mixing minmax beyond two players is a nonconvex "
             "program; values are local minima over coordinate descent";
  int n = game.num_players();
  for (int i = 0; i < n; ++i) {
    double best_val = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> best_w;
    // Starts: every pure profile of the others, plus uniform.
    std::vector<std::vector<std::vector<double>>> starts;
    {
      std::vector<std::vector<double>> uniform(n);
      for (int j = 0; j < n; ++j) {
        uniform[j].assign(game.num_actions(j), 1.0 / game.num_actions(j));
      }
      starts.push_back(uniform);
      for (std::size_t a = 0; a < game.num_profiles() && starts.size() < 33; ++a) {
        auto actions = game.profile_actions(a);
        auto w = uniform;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          w[j].assign(game.num_actions(j), 0.0);
          w[j][actions[j]] = 1.0;
        }
        starts.push_back(std::move(w));
      }
    }
    auto response = [&](const std::vector<std::vector<double>>& w) {
      double best = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < game.num_actions(i); ++a) {
        best = std::max(best, deviation_reward_d(game, i, a, w));
      }
      return best;
    };
    for (auto& w : starts) {
      for (int round = 0; round < 20; ++round) {
        double before = response(w);
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          // Linear program in w_j: minimize the best response value.
          std::size_t k = game.num_actions(j);
          LpProblem<double> p;
          p.num_vars = k + 1;
          p.objective.assign(k + 1, 0.0);
          p.objective[k] = -1.0;
          p.nonneg.assign(k + 1, true);
          p.nonneg[k] = false;
          for (int a = 0; a < game.num_actions(i); ++a) {
            std::vector<double> c(k + 1, 0.0);
            for (std::size_t b = 0; b < k; ++b) {
              auto wj = w;
              wj[j].assign(k, 0.0);
              wj[j][b] = 1.0;
              c[b] = -deviation_reward_d(game, i, a, wj);
            }
            c[k] = 1.0;
            p.add_row(c, LpRel::Ge, 0.0);
          }
          std::vector<double> ones(k + 1, 1.0);
          ones[k] = 0.0;
          p.add_row(ones, LpRel::Eq, 1.0);
          auto sol = solve_lp(p);
          if (sol.status == LpStatus::Optimal) {
            w[j].assign(sol.x.begin(), sol.x.begin() + k);
          }
        }
        if (before - response(w) < 1e-12) break;
      }
      double v = response(w);
      if (v < best_val) {
        best_val = v;
        best_w = w;
      }
    }
    res.values.push_back(rational_from_double(best_val));
    res.values_d.push_back(best_val);
    std::vector<MixedAction> acts(n);
    int best_a = 0;
    double bv = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < game.num_actions(i); ++a) {
      double v = deviation_reward_d(game, i, a, best_w);
      if (v > bv) {
        bv = v;
        best_a = a;
      }
    }
    for (int j = 0; j < n; ++j) {
      if (j == i) {
        acts[j] = MixedAction::pure(best_a, game.num_actions(j));
      } else {
        RationalVector rw;
        for (double x : best_w[j]) rw.push_back(rational_from_double(x));
        Rational sum(0);
        for (const auto& x : rw) sum += x;
        for (auto& x : rw) x /= sum;
        acts[j] = MixedAction{rw};
      }
    }
    res.witnesses.push_back(MixedProfile{std::move(acts)});
  }
  return res;
}

// Evaluates player i's payoff for a profile assembled from factor coords.
Rational cell_payoff(const StageGame& game, int player,
                     const std::vector<int>& sup0, const RationalVector& w0,
                     const std::vector<int>& sup1, const RationalVector& w1) {
  Rational v(0);
  for (std::size_t a = 0; a < sup0.size(); ++a) {
    for (std::size_t b = 0; b < sup1.size(); ++b) {
      std::vector<int> pa = {sup0[a], sup1[b]};
      v += w0[a] * w1[b] * game.payoff(game.profile_index(pa), player);
    }
  }
  return v;
}

MinmaxResult nash_worst_minmax(const StageGame& game) {
  MinmaxResult res;
  res.notion = MinmaxNotion::NashWorst;
  auto nash = enumerate_stage_nash(game);
  BW_DOMAIN(!nash.equilibria.empty() || nash.degenerate,
            "stage game appears to have no Nash equilibrium in the searched "
            "class; cannot take a worst equilibrium payoff");
  if (!nash.complete) {
    res.exact = false;
    res.note = "worst taken over the searched equilibria only";
  }
  int n = game.num_players();
  for (int i = 0; i < n; ++i) {
    bool have = false;
    Rational best(0);
    MixedProfile witness;
    for (std::size_t e = 0; e < nash.equilibria.size(); ++e) {
      const Rational& v = nash.payoffs[e][i];
      if (!have || v < best) {
        best = v;
        witness = nash.equilibria[e];
        have = true;
      }
    }
    // Continua: minimize the (bilinear) payoff over each region. Segment
    // regions are exact via their corners; anything wider falls back to the
    // representative and is flagged.
    for (std::size_t dcell = 0; dcell < nash.degenerate_supports.size(); ++dcell) {
      if (n != 2) break;
      const auto& sup = nash.degenerate_supports[dcell];
      auto f2 = solve_factor(game, 0, sup.supports[0], 1, sup.supports[1]);
      auto f1 = solve_factor(game, 1, sup.supports[1], 0, sup.supports[0]);
      BW_ASSERT(f1 && f2, "degenerate support must rebuild");
      auto r1 = nash_region(game, *f1, 1, sup.supports[1]);
      auto r2 = nash_region(game, *f2, 0, sup.supports[0]);
      BW_ASSERT(!r1.empty && !r2.empty, "degenerate region must rebuild");
      std::vector<RationalVector> c1, c2;
      bool exact1 = true, exact2 = true;
      if (r1.is_point) {
        c1 = {r1.point};
      } else if (r1.is_segment) {
        c1 = {segment_point(*f1, r1.range.lo), segment_point(*f1, r1.range.hi)};
      } else {
        c1 = {r1.interior};
        exact1 = false;
      }
      if (r2.is_point) {
        c2 = {r2.point};
      } else if (r2.is_segment) {
        c2 = {segment_point(*f2, r2.range.lo), segment_point(*f2, r2.range.hi)};
      } else {
        c2 = {r2.interior};
        exact2 = false;
      }
      if (!exact1 || !exact2) {
        res.exact = false;
        res.note = "a wide equilibrium continuum was sampled, not minimized";
      }
      for (const auto& w1 : c1) {
        for (const auto& w2 : c2) {
          Rational v = cell_payoff(game, i, sup.supports[0], w1,
                                   sup.supports[1], w2);
          if (!have || v < best) {
            best = v;
            witness = MixedProfile{
                {action_from_support(game.num_actions(0), sup.supports[0], w1),
                 action_from_support(game.num_actions(1), sup.supports[1], w2)}};
            have = true;
          }
        }
      }
    }
    BW_ASSERT(have, "no equilibrium payoff collected");
    res.values.push_back(best);
    res.values_d.push_back(to_double(best));
    res.witnesses.push_back(witness);
  }
  return res;
}

MinmaxResult mi_minmax(const StageGame& game) {
  MinmaxResult res;
  res.notion = MinmaxNotion::MyopicIndifferent;
  auto mi = enumerate_mi_profiles(game);
  if (!mi.complete) {
    res.exact = false;
    res.note = "indifference families with several mixers were not searched";
  }
  int n = game.num_players();
  for (int i = 0; i < n; ++i) {
    bool have = false;
    Rational best(0);
    MixedProfile witness;
    auto consider = [&](const MixedProfile& prof) {
      Rational v(0);
      int best_a = 0;
      for (int a = 0; a < game.num_actions(i); ++a) {
        Rational r = deviation_reward(game, i, a, prof);
        if (a == 0 || r > v) {
          v = r;
          best_a = a;
        }
      }
      if (!have || v < best) {
        best = v;
        witness = prof;
        witness.actions[i] = MixedAction::pure(best_a, game.num_actions(i));
        have = true;
      }
    };
    for (const auto& m : mi.members) consider(m);
    for (const auto& cell : mi.cells) {
      // Find the opponents' freedom. Two players: the opponent factor is a
      // polytope and the inner max is linear, so one LP is exact. More
      // players: cells here have a single mixing player; if that mixer is i
      // itself the opponents are pure and the representative is exact.
      if (n == 2) {
        int j = 1 - i;
        const MiCellFactor& fj = cell.factors[j];
        if (fj.dim == 0) {
          consider(cell.representative);
          continue;
        }
        std::size_t k = fj.support.size();
        LpProblem<Rational> p;
        p.num_vars = k + 1;
        p.objective.assign(k + 1, Rational(0));
        p.objective[k] = Rational(-1);
        p.nonneg.assign(k + 1, true);
        p.nonneg[k] = false;
        for (std::size_t rr = 0; rr < fj.rows.size(); ++rr) {
          RationalVector c = fj.rows[rr];
          c.push_back(Rational(0));
          p.add_row(c, LpRel::Eq, fj.rhs[rr]);
        }
        RationalVector ones(k + 1, Rational(1));
        ones[k] = Rational(0);
        p.add_row(ones, LpRel::Eq, Rational(1));
        for (int a = 0; a < game.num_actions(i); ++a) {
          RationalVector c(k + 1, Rational(0));
          for (std::size_t b = 0; b < k; ++b) {
            std::vector<int> pa(2);
            pa[i] = a;
            pa[j] = fj.support[b];
            c[b] = -game.payoff(game.profile_index(pa), i);
          }
          c[k] = Rational(1);
          p.add_row(c, LpRel::Ge, Rational(0));
        }
        auto sol = solve_lp(p);
        BW_ASSERT(sol.status == LpStatus::Optimal, "cell minmax LP must solve");
        RationalVector w(sol.x.begin(), sol.x.begin() + k);
        MixedProfile prof = cell.representative;
        prof.actions[j] = action_from_support(game.num_actions(j), fj.support, w);
        consider(prof);
      } else {
        const MiCellFactor& mix = cell.factors.front();
        if (mix.player == i) {
          consider(cell.representative);
          continue;
        }
        // Linear in the single mixer's weights: optimum at a simplex vertex,
        // so scanning the mixer's supported actions is exact.
        for (int b : mix.support) {
          MixedProfile prof = cell.representative;
          prof.actions[mix.player] =
              MixedAction::pure(b, game.num_actions(mix.player));
          consider(prof);
        }
      }
    }
    BW_ASSERT(have, "indifference set cannot be empty: pure profiles belong");
    res.values.push_back(best);
    res.values_d.push_back(to_double(best));
    res.witnesses.push_back(witness);
  }
  return res;
}

}  // namespace

MinmaxResult minmax(const StageGame& game, MinmaxNotion notion) {
  switch (notion) {
    case MinmaxNotion::Pure:
      return pure_minmax(game);
    case MinmaxNotion::Standard:
      return game.num_players() == 2 ? standard_minmax_2p(game)
                                     : standard_minmax_np(game);
    case MinmaxNotion::NashWorst:
      return nash_worst_minmax(game);
    case MinmaxNotion::MyopicIndifferent:
      return mi_minmax(game);
  }
  throw InternalError("unknown minmax notion");
}

MinmaxReport minmax_report(const StageGame& game) {
  MinmaxReport rep{minmax(game, MinmaxNotion::Standard),
                   minmax(game, MinmaxNotion::Pure),
                   minmax(game, MinmaxNotion::NashWorst),
                   minmax(game, MinmaxNotion::MyopicIndifferent)};
  return rep;
}

}  // namespace blackwell
