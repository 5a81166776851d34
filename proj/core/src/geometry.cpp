#include "blackwell/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "blackwell/errors.hpp"
#include "blackwell/linalg.hpp"
#include "blackwell/lp.hpp"

namespace blackwell {

namespace {

Rational cross(const RationalVector& o, const RationalVector& a,
               const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational dot2(const RationalVector& a, const RationalVector& b) {
  return a[0] * b[0] + a[1] * b[1];
}

// Canonical direction: scaled so the leading nonzero entry is +-1 with
// positive leading sign preserved separately; used only for deduplication.
RationalVector reduce_direction(RationalVector v) {
  Rational scale(0);
  for (const auto& x : v) {
    if (x != 0) {
      scale = rational_abs(x);
      break;
    }
  }
  BW_ASSERT(scale != 0, "zero direction");
  for (auto& x : v) x /= scale;
  return v;
}

}  // namespace

std::vector<std::vector<double>> PayoffPolytope::vertices_d() const {
  std::vector<std::vector<double>> out;
  for (const auto& v : vertices) out.push_back(to_double_vec(v));
  return out;
}

std::vector<RationalVector> convex_hull_2d(std::vector<RationalVector> points) {
  std::sort(points.begin(), points.end(),
            [](const RationalVector& a, const RationalVector& b) {
              if (a[0] != b[0]) return a[0] < b[0];
              return a[1] < b[1];
            });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;
  std::vector<RationalVector> hull;
  // Lower then upper chain; strict turns only, so collinear midpoints drop.
  for (const auto& p : points) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  std::size_t lower = hull.size() + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (hull.size() >= lower &&
           cross(hull[hull.size() - 2], hull.back(), *it) <= 0) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  hull.pop_back();
  return hull;
}

namespace {

std::vector<Halfspace> halfspaces_of_hull(const std::vector<RationalVector>& hull) {
  std::vector<Halfspace> hs;
  if (hull.empty()) return hs;
  if (hull.size() == 1) {
    const auto& p = hull[0];
    hs.push_back({{Rational(1), Rational(0)}, p[0]});
    hs.push_back({{Rational(-1), Rational(0)}, -p[0]});
    hs.push_back({{Rational(0), Rational(1)}, p[1]});
    hs.push_back({{Rational(0), Rational(-1)}, -p[1]});
    return hs;
  }
  if (hull.size() == 2) {
    RationalVector d = {hull[1][0] - hull[0][0], hull[1][1] - hull[0][1]};
    RationalVector n = {d[1], -d[0]};
    hs.push_back({n, dot2(n, hull[0])});
    hs.push_back({{-n[0], -n[1]}, -dot2(n, hull[0])});
    // End caps along the segment direction.
    hs.push_back({d, dot2(d, hull[1])});
    hs.push_back({{-d[0], -d[1]}, -dot2(d, hull[0])});
    return hs;
  }
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const auto& a = hull[k];
    const auto& b = hull[(k + 1) % hull.size()];
    RationalVector n = {b[1] - a[1], a[0] - b[0]};
    hs.push_back({n, dot2(n, a)});
  }
  return hs;
}

}  // namespace

PayoffPolytope polytope_from_points(std::vector<RationalVector> points,
                                    int ambient) {
  PayoffPolytope poly;
  poly.ambient = ambient;
  if (points.empty()) return poly;
  poly.empty = false;
  poly.bounded = true;
  if (ambient == 2) {
    poly.vertices = convex_hull_2d(std::move(points));
    poly.halfspaces = halfspaces_of_hull(poly.vertices);
    poly.reduced = true;
  } else {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    poly.vertices = std::move(points);
    poly.reduced = false;
  }
  return poly;
}

PayoffPolytope feasible_set(const StageGame& game) {
  std::vector<RationalVector> pts;
  for (std::size_t a = 0; a < game.num_profiles(); ++a) {
    pts.push_back(game.payoff_vector(a));
  }
  return polytope_from_points(std::move(pts), game.num_players());
}

namespace {

bool angle_less(const RationalVector& a, const RationalVector& b) {
  auto half = [](const RationalVector& v) {
    // 0: upper half plane including positive x-axis; 1: the rest.
    if (v[1] > 0) return 0;
    if (v[1] == 0 && v[0] > 0) return 0;
    return 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Rational cr = a[0] * b[1] - a[1] * b[0];
  return cr > 0;
}

}  // namespace

PayoffPolytope intersect_halfspaces_2d(const std::vector<Halfspace>& halfspaces) {
  BW_REQUIRE(!halfspaces.empty(), "empty halfspace list");
  for (const auto& h : halfspaces) {
    BW_REQUIRE(h.normal.size() == 2, "plane halfspaces expected");
    BW_REQUIRE(h.normal[0] != 0 || h.normal[1] != 0, "zero normal");
  }
  PayoffPolytope poly;
  poly.ambient = 2;
  poly.halfspaces = halfspaces;

  // Boundedness: the normals must positively span the plane, i.e. no angular
  // gap of pi or more between consecutive directions.
  std::vector<RationalVector> dirs;
  for (const auto& h : halfspaces) dirs.push_back(reduce_direction(h.normal));
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  bool spans = dirs.size() >= 3;
  if (spans) {
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const auto& a = dirs[k];
      const auto& b = dirs[(k + 1) % dirs.size()];
      Rational cr = a[0] * b[1] - a[1] * b[0];
      // Gap of pi or more between consecutive directions leaves a recession
      // direction: cr < 0 is a reflex gap, cr == 0 with opposite signs is
      // exactly pi.
      if (cr < 0 || (cr == 0 && dot2(a, b) < 0)) {
        spans = false;
        break;
      }
    }
  }
  if (!spans) {
    // Could be empty or unbounded; decide with a feasibility program.
    LpProblem<Rational> p;
    p.num_vars = 2;
    p.objective = {Rational(0), Rational(0)};
    for (const auto& h : halfspaces) p.add_row(h.normal, LpRel::Le, h.offset);
    auto sol = solve_lp(p);
    poly.empty = sol.status == LpStatus::Infeasible;
    poly.bounded = poly.empty;
    return poly;
  }

  // Bounded: vertices arise from pairs of active boundary lines.
  std::vector<RationalVector> candidates;
  for (std::size_t i = 0; i < halfspaces.size(); ++i) {
    for (std::size_t j = i + 1; j < halfspaces.size(); ++j) {
      const auto& a = halfspaces[i];
      const auto& b = halfspaces[j];
      Rational det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
      if (det == 0) continue;
      RationalVector v = {
          (a.offset * b.normal[1] - b.offset * a.normal[1]) / det,
          (a.normal[0] * b.offset - b.normal[0] * a.offset) / det};
      bool inside = true;
      for (const auto& h : halfspaces) {
        if (dot2(h.normal, v) > h.offset) {
          inside = false;
          break;
        }
      }
      if (inside) candidates.push_back(std::move(v));
    }
  }
  if (candidates.empty()) {
    poly.empty = true;
    poly.bounded = true;
    return poly;
  }
  poly.empty = false;
  poly.bounded = true;
  poly.vertices = convex_hull_2d(std::move(candidates));
  poly.halfspaces = halfspaces_of_hull(poly.vertices);
  poly.reduced = true;
  return poly;
}

PayoffPolytope clip_below(const PayoffPolytope& poly, const RationalVector& floors) {
  BW_REQUIRE(static_cast<int>(floors.size()) == poly.ambient,
             "one floor per coordinate");
  if (poly.empty) return poly;
  if (poly.ambient == 2 && poly.reduced) {
    std::vector<Halfspace> hs = poly.halfspaces;
    for (int i = 0; i < 2; ++i) {
      RationalVector n(2, Rational(0));
      n[i] = Rational(-1);
      hs.push_back({n, -floors[i]});
    }
    return intersect_halfspaces_2d(hs);
  }
  // Generator form: keep generators, add the floors as clipping halfspaces.
  PayoffPolytope out = poly;
  for (int i = 0; i < poly.ambient; ++i) {
    RationalVector n(poly.ambient, Rational(0));
    n[i] = Rational(-1);
    out.halfspaces.push_back({n, -floors[i]});
  }
  // Emptiness via membership LP feasibility on the clipped hull.
  LpProblem<Rational> p;
  std::size_t m = out.vertices.size();
  p.num_vars = m;
  p.objective.assign(m, Rational(0));
  p.nonneg.assign(m, true);
  RationalVector ones(m, Rational(1));
  p.add_row(ones, LpRel::Eq, Rational(1));
  for (const auto& h : out.halfspaces) {
    RationalVector row(m, Rational(0));
    for (std::size_t g = 0; g < m; ++g) {
      Rational v(0);
      for (int c = 0; c < poly.ambient; ++c) v += h.normal[c] * out.vertices[g][c];
      row[g] = v;
    }
    p.add_row(row, LpRel::Le, h.offset);
  }
  out.empty = solve_lp(p).status == LpStatus::Infeasible;
  return out;
}

bool polytope_contains(const PayoffPolytope& poly, const RationalVector& v) {
  BW_REQUIRE(static_cast<int>(v.size()) == poly.ambient, "dimension mismatch");
  if (poly.empty) return false;
  if (poly.reduced) {
    for (const auto& h : poly.halfspaces) {
      if (dot2(h.normal, v) > h.offset) return false;
    }
    return true;
  }
  BW_REQUIRE(!poly.vertices.empty(), "containment needs generators or a hull");
  // v in conv(generators), subject to any clipping halfspaces.
  for (const auto& h : poly.halfspaces) {
    Rational acc(0);
    for (int c = 0; c < poly.ambient; ++c) acc += h.normal[c] * v[c];
    if (acc > h.offset) return false;
  }
  LpProblem<Rational> p;
  std::size_t m = poly.vertices.size();
  p.num_vars = m;
  p.objective.assign(m, Rational(0));
  p.nonneg.assign(m, true);
  RationalVector ones(m, Rational(1));
  p.add_row(ones, LpRel::Eq, Rational(1));
  for (int c = 0; c < poly.ambient; ++c) {
    RationalVector row(m);
    for (std::size_t g = 0; g < m; ++g) row[g] = poly.vertices[g][c];
    p.add_row(row, LpRel::Eq, v[c]);
  }
  return solve_lp(p).status != LpStatus::Infeasible;
}

Rational support_value(const PayoffPolytope& poly, const RationalVector& dir) {
  BW_REQUIRE(!poly.empty, "support of an empty set");
  BW_REQUIRE(poly.bounded, "support of an unbounded set");
  BW_REQUIRE(!poly.vertices.empty(), "support needs a vertex or generator form");
  // Clipping halfspaces cannot raise a maximum over generators, and the
  // plane form is exact, so a vertex scan is correct whenever the generators
  // are unclipped.
  if (!poly.reduced && !poly.halfspaces.empty()) {
    LpProblem<Rational> p;
    std::size_t m = poly.vertices.size();
    p.num_vars = m;
    p.nonneg.assign(m, true);
    p.objective.assign(m, Rational(0));
    for (std::size_t g = 0; g < m; ++g) {
      Rational acc(0);
      for (std::size_t c = 0; c < dir.size(); ++c) acc += dir[c] * poly.vertices[g][c];
      p.objective[g] = acc;
    }
    RationalVector ones(m, Rational(1));
    p.add_row(ones, LpRel::Eq, Rational(1));
    for (const auto& h : poly.halfspaces) {
      RationalVector row(m, Rational(0));
      for (std::size_t g = 0; g < m; ++g) {
        Rational acc(0);
        for (std::size_t c = 0; c < h.normal.size(); ++c) {
          acc += h.normal[c] * poly.vertices[g][c];
        }
        row[g] = acc;
      }
      p.add_row(row, LpRel::Le, h.offset);
    }
    auto sol = solve_lp(p);
    BW_DOMAIN(sol.status == LpStatus::Optimal, "clipped set is empty");
    return sol.objective;
  }
  bool first = true;
  Rational best(0);
  for (const auto& v : poly.vertices) {
    Rational acc(0);
    for (std::size_t c = 0; c < dir.size(); ++c) acc += dir[c] * v[c];
    if (first || acc > best) {
      best = acc;
      first = false;
    }
  }
  return best;
}

int polytope_dimension(const PayoffPolytope& poly) {
  if (poly.empty) return -1;
  if (poly.reduced) {
    if (poly.vertices.size() == 1) return 0;
    if (poly.vertices.size() == 2) return 1;
    return 2;
  }
  BW_DOMAIN(poly.halfspaces.empty(),
            "dimension of a clipped generator form is not computed exactly; "
            "use full_dimensional");
  BW_REQUIRE(!poly.vertices.empty(), "dimension needs generators");
  RationalMatrix diffs;
  for (std::size_t g = 1; g < poly.vertices.size(); ++g) {
    RationalVector d(poly.ambient);
    for (int c = 0; c < poly.ambient; ++c) {
      d[c] = poly.vertices[g][c] - poly.vertices[0][c];
    }
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return static_cast<int>(rational_rank(diffs));
}

bool full_dimensional(const PayoffPolytope& poly) {
  if (poly.empty) return false;
  if (poly.reduced) return poly.vertices.size() >= 3;
  BW_REQUIRE(!poly.vertices.empty(), "needs generators");
  // max t subject to: v = sum mu_g g, mu in simplex, and for every clipping
  // halfspace n.v <= offset - t, plus |coordinate| * t slack inside the hull
  // itself via an l-infinity ball: v +- t e_c must stay representable. The
  // cheap sufficient test used here: the interior LP over mu with halfspace
  // slack t, plus unclipped affine rank equal to ambient.
  RationalMatrix diffs;
  for (std::size_t g = 1; g < poly.vertices.size(); ++g) {
    RationalVector d(poly.ambient);
    for (int c = 0; c < poly.ambient; ++c) {
      d[c] = poly.vertices[g][c] - poly.vertices[0][c];
    }
    diffs.push_back(std::move(d));
  }
  if (diffs.empty() || static_cast<int>(rational_rank(diffs)) < poly.ambient) {
    return false;
  }
  if (poly.halfspaces.empty()) return true;
  // Interior point of the clip: strict slack in every clipping halfspace
  // while staying in the hull; combined with full affine rank this certifies
  // a ball after shrinking toward hull barycenters.
  LpProblem<Rational> p;
  std::size_t m = poly.vertices.size();
  p.num_vars = m + 1;  // mu, t
  p.objective.assign(m + 1, Rational(0));
  p.objective[m] = Rational(1);
  p.nonneg.assign(m + 1, true);
  RationalVector ones(m + 1, Rational(1));
  ones[m] = Rational(0);
  p.add_row(ones, LpRel::Eq, Rational(1));
  for (const auto& h : poly.halfspaces) {
    RationalVector row(m + 1, Rational(0));
    for (std::size_t g = 0; g < m; ++g) {
      Rational acc(0);
      for (std::size_t c = 0; c < h.normal.size(); ++c) {
        acc += h.normal[c] * poly.vertices[g][c];
      }
      row[g] = acc;
    }
    row[m] = Rational(1);
    p.add_row(row, LpRel::Le, h.offset);
  }
  auto sol = solve_lp(p);
  return sol.status == LpStatus::Optimal && sol.objective > 0;
}

double inradius_at(const PayoffPolytope& poly, const std::vector<double>& center) {
  BW_REQUIRE(poly.ambient == 2 && poly.reduced, "plane polytopes only");
  if (poly.empty || poly.vertices.size() < 3) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& h : poly.halfspaces) {
    double nx = to_double(h.normal[0]);
    double ny = to_double(h.normal[1]);
    double slack = to_double(h.offset) - (nx * center[0] + ny * center[1]);
    double dist = slack / std::hypot(nx, ny);
    best = std::min(best, dist);
  }
  return std::max(best, 0.0);
}

}  // namespace blackwell
