#pragma once

#include <string>
#include <vector>

#include "blackwell/game.hpp"
#include "blackwell/rational.hpp"

namespace blackwell {

// Closed halfspace {v : normal . v <= offset}.
struct Halfspace {
  RationalVector normal;
  Rational offset;
};

// Convex payoff sets. In the plane both representations are kept exact and
// reduced: `vertices` is the counterclockwise hull (one point for a point,
// two for a segment) and `halfspaces` pins exactly the same set. Beyond two
// dimensions the set is carried as generators (convex combinations of
// `vertices`) plus optional clipping halfspaces; membership then goes
// through a rational feasibility program instead of a vertex walk.
struct PayoffPolytope {
  int ambient = 0;
  bool empty = true;
  bool bounded = true;
  bool reduced = false;  // true when `vertices` is a proper 2D hull
  std::vector<RationalVector> vertices;
  std::vector<Halfspace> halfspaces;

  std::vector<std::vector<double>> vertices_d() const;
};

// Counterclockwise convex hull with collinear interior points dropped.
std::vector<RationalVector> convex_hull_2d(std::vector<RationalVector> points);

// Exact polytope from points (two-dimensional: reduced; higher: generators).
PayoffPolytope polytope_from_points(std::vector<RationalVector> points, int ambient);

// The set of payoff vectors achievable by randomizing over action profiles.
PayoffPolytope feasible_set(const StageGame& game);

// Exact intersection of halfspaces in the plane. Unbounded intersections are
// flagged (`bounded = false`) and keep only the halfspace form.
PayoffPolytope intersect_halfspaces_2d(const std::vector<Halfspace>& halfspaces);

// Intersection with {v_i >= floors[i] for all i}.
PayoffPolytope clip_below(const PayoffPolytope& poly, const RationalVector& floors);

// Exact membership. Works for every representation.
bool polytope_contains(const PayoffPolytope& poly, const RationalVector& v);

// max over the set of dir . v. Requires a nonempty bounded set.
Rational support_value(const PayoffPolytope& poly, const RationalVector& dir);

// Affine dimension: 2D forms exactly; generator forms without clipping
// exactly; clipped generator forms are refused (use full_dimensional).
int polytope_dimension(const PayoffPolytope& poly);

// Does the set contain a ball of positive radius (in the ambient space)?
bool full_dimensional(const PayoffPolytope& poly);

// Largest eta such that the closed ball B(center, eta) fits inside; zero if
// the center is on the boundary or outside. Plane only; Euclidean radii are
// irrational in general, so this one is numeric.
double inradius_at(const PayoffPolytope& poly, const std::vector<double>& center);

}  // namespace blackwell
