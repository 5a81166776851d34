#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "blackwell/errors.hpp"
#include "blackwell/examples.hpp"
#include "blackwell/geometry.hpp"

using namespace blackwell;

namespace {

RationalVector pt(long long x, long long y) {
  return {Rational(x), Rational(y)};
}

RationalVector ptq(long long xn, long long xd, long long yn, long long yd) {
  return {Rational(xn, xd), Rational(yn, yd)};
}

bool same_vertex_set(std::vector<RationalVector> a, std::vector<RationalVector> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("convex hull drops interior and collinear points") {
  auto hull = convex_hull_2d({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1),
                              pt(1, 0), pt(2, 1)});
  REQUIRE(hull.size() == 4);
  CHECK(same_vertex_set(hull, {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}));
  // Counterclockwise from the lexicographic minimum.
  CHECK(hull[0] == pt(0, 0));
  CHECK(hull[1] == pt(2, 0));
  CHECK(hull[2] == pt(2, 2));
  CHECK(hull[3] == pt(0, 2));

  auto seg = convex_hull_2d({pt(0, 0), pt(1, 1), pt(3, 3), pt(2, 2)});
  REQUIRE(seg.size() == 2);
  CHECK(same_vertex_set(seg, {pt(0, 0), pt(3, 3)}));

  auto point = convex_hull_2d({pt(5, 7), pt(5, 7)});
  REQUIRE(point.size() == 1);
}

TEST_CASE("feasible set of the prisoners dilemma is the expected quadrilateral") {
  auto g = make_prisoners_dilemma();
  auto poly = feasible_set(g);
  CHECK(poly.ambient == 2);
  CHECK(!poly.empty);
  CHECK(poly.bounded);
  CHECK(poly.reduced);
  CHECK(same_vertex_set(poly.vertices,
                        {pt(2, 2), pt(-1, 3), pt(3, -1), pt(0, 0)}));
  CHECK(poly.halfspaces.size() == 4);

  CHECK(polytope_contains(poly, pt(1, 1)));
  CHECK(polytope_contains(poly, pt(0, 0)));
  CHECK(polytope_contains(poly, ptq(1, 1, 7, 3)));  // on the edge x + 3y = 8
  CHECK(!polytope_contains(poly, pt(3, 2)));
  CHECK(!polytope_contains(poly, ptq(-1, 2, -1, 2)));

  CHECK(support_value(poly, pt(1, 1)) == Rational(4));
  CHECK(support_value(poly, pt(1, 0)) == Rational(3));
  CHECK(support_value(poly, pt(1, 3)) == Rational(8));
  CHECK(support_value(poly, pt(-1, -1)) == Rational(0));

  CHECK(polytope_dimension(poly) == 2);
  CHECK(full_dimensional(poly));
}

TEST_CASE("clipping the prisoners dilemma feasible set at the minmax point") {
  auto poly = feasible_set(make_prisoners_dilemma());
  auto clipped = clip_below(poly, {Rational(0), Rational(0)});
  CHECK(!clipped.empty);
  CHECK(clipped.bounded);
  CHECK(clipped.reduced);
  CHECK(same_vertex_set(clipped.vertices,
                        {pt(0, 0), ptq(8, 3, 0, 1), pt(2, 2), ptq(0, 1, 8, 3)}));
  CHECK(polytope_contains(clipped, pt(1, 1)));
  CHECK(!polytope_contains(clipped, ptq(-1, 10, 1, 1)));
  CHECK(support_value(clipped, pt(1, 0)) == Rational(8, 3));

  // Clipping above the whole set leaves nothing.
  auto gone = clip_below(poly, {Rational(10), Rational(10)});
  CHECK(gone.empty);
}

TEST_CASE("halfspace intersection recovers a triangle") {
  std::vector<Halfspace> hs = {
      {{Rational(-1), Rational(0)}, Rational(0)},  // x >= 0
      {{Rational(0), Rational(-1)}, Rational(0)},  // y >= 0
      {{Rational(1), Rational(1)}, Rational(1)},   // x + y <= 1
  };
  auto poly = intersect_halfspaces_2d(hs);
  CHECK(!poly.empty);
  CHECK(poly.bounded);
  CHECK(same_vertex_set(poly.vertices, {pt(0, 0), pt(1, 0), pt(0, 1)}));
  CHECK(polytope_contains(poly, ptq(1, 4, 1, 4)));
  CHECK(!polytope_contains(poly, ptq(3, 4, 3, 4)));
}

TEST_CASE("halfspace intersection flags strips and empty sets") {
  // A vertical strip: normals do not span the plane.
  std::vector<Halfspace> strip = {
      {{Rational(1), Rational(0)}, Rational(1)},
      {{Rational(-1), Rational(0)}, Rational(1)},
  };
  auto s = intersect_halfspaces_2d(strip);
  CHECK(!s.empty);
  CHECK(!s.bounded);
  CHECK(s.vertices.empty());
  CHECK(s.halfspaces.size() == 2);

  // Adding one roof still leaves an exactly-pi gap below.
  strip.push_back({{Rational(0), Rational(1)}, Rational(0)});
  auto t = intersect_halfspaces_2d(strip);
  CHECK(!t.empty);
  CHECK(!t.bounded);

  // Contradictory bounds, non-spanning: infeasible.
  std::vector<Halfspace> contra = {
      {{Rational(1), Rational(0)}, Rational(0)},
      {{Rational(-1), Rational(0)}, Rational(-1)},  // x >= 1
  };
  auto e = intersect_halfspaces_2d(contra);
  CHECK(e.empty);
  CHECK(e.bounded);

  // Contradictory bounds with spanning normals: still infeasible.
  contra.push_back({{Rational(0), Rational(1)}, Rational(1)});
  contra.push_back({{Rational(0), Rational(-1)}, Rational(1)});
  auto e2 = intersect_halfspaces_2d(contra);
  CHECK(e2.empty);
  CHECK(e2.bounded);

  // Spanning normals pinning a single point.
  std::vector<Halfspace> pin = {
      {{Rational(1), Rational(0)}, Rational(0)},
      {{Rational(-1), Rational(0)}, Rational(0)},
      {{Rational(0), Rational(1)}, Rational(0)},
      {{Rational(0), Rational(-1)}, Rational(0)},
  };
  auto p = intersect_halfspaces_2d(pin);
  CHECK(!p.empty);
  REQUIRE(p.vertices.size() == 1);
  CHECK(p.vertices[0] == pt(0, 0));
  CHECK(polytope_dimension(p) == 0);
  CHECK(!full_dimensional(p));
}

TEST_CASE("vertex to halfspace round trip on random rational polygons") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long long> num(-12, 12);
  std::uniform_int_distribution<long long> den(1, 9);
  std::uniform_int_distribution<int> count(3, 10);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RationalVector> pts;
    int m = count(rng);
    for (int k = 0; k < m; ++k) {
      pts.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    }
    auto poly = polytope_from_points(pts, 2);
    auto back = intersect_halfspaces_2d(poly.halfspaces);
    CHECK(same_vertex_set(poly.vertices, back.vertices));
    // Every input point must be contained, vertices exactly on the boundary.
    for (const auto& q : pts) CHECK(polytope_contains(poly, q));
  }
}

TEST_CASE("segment and point polytopes keep exact two way forms") {
  auto seg = polytope_from_points({pt(1, 1), pt(3, 5)}, 2);
  CHECK(seg.reduced);
  CHECK(polytope_dimension(seg) == 1);
  CHECK(!full_dimensional(seg));
  CHECK(polytope_contains(seg, pt(2, 3)));
  CHECK(!polytope_contains(seg, pt(2, 4)));
  CHECK(!polytope_contains(seg, pt(5, 9)));  // on the line but past the cap
  auto seg_back = intersect_halfspaces_2d(seg.halfspaces);
  CHECK(same_vertex_set(seg.vertices, seg_back.vertices));

  auto point = polytope_from_points({pt(-2, 7)}, 2);
  CHECK(polytope_dimension(point) == 0);
  CHECK(polytope_contains(point, pt(-2, 7)));
  CHECK(!polytope_contains(point, pt(-2, 6)));
  CHECK(support_value(point, pt(3, 1)) == Rational(1));
}

TEST_CASE("generator form handles three player payoff sets") {
  std::vector<RationalVector> gens = {
      {Rational(0), Rational(0), Rational(0)},
      {Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1)},
  };
  auto poly = polytope_from_points(gens, 3);
  CHECK(!poly.reduced);
  CHECK(polytope_dimension(poly) == 3);
  CHECK(full_dimensional(poly));
  RationalVector bary = {Rational(1, 4), Rational(1, 4), Rational(1, 4)};
  CHECK(polytope_contains(poly, bary));
  CHECK(!polytope_contains(poly, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  CHECK(support_value(poly, {Rational(1), Rational(1), Rational(1)}) == Rational(1));
  CHECK(support_value(poly, {Rational(2), Rational(1), Rational(1)}) == Rational(2));

  // A triangle floating in three dimensional space is not full dimensional.
  gens.pop_back();
  auto flat = polytope_from_points(gens, 3);
  CHECK(polytope_dimension(flat) == 2);
  CHECK(!full_dimensional(flat));

  // Clipping keeps generators plus floors; membership honors both.
  auto clipped = clip_below(poly, {Rational(1, 2), Rational(0), Rational(0)});
  CHECK(!clipped.empty);
  CHECK(polytope_contains(clipped, {Rational(3, 4), Rational(1, 8), Rational(0)}));
  CHECK(!polytope_contains(clipped, bary));  // violates the new floor
  CHECK(full_dimensional(clipped));
  CHECK_THROWS_AS((void)polytope_dimension(clipped), DomainError);
  CHECK(support_value(clipped, {Rational(0), Rational(1), Rational(0)}) ==
        Rational(1, 2));

  auto drained = clip_below(poly, {Rational(1), Rational(1), Rational(1)});
  CHECK(drained.empty);
}

TEST_CASE("inradius measures the distance to the nearest edge") {
  std::vector<Halfspace> box = {
      {{Rational(-1), Rational(0)}, Rational(0)},
      {{Rational(0), Rational(-1)}, Rational(0)},
      {{Rational(1), Rational(0)}, Rational(1)},
      {{Rational(0), Rational(1)}, Rational(1)},
  };
  auto poly = intersect_halfspaces_2d(box);
  CHECK(inradius_at(poly, {0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(inradius_at(poly, {0.25, 0.5}) == doctest::Approx(0.25));
  CHECK(inradius_at(poly, {0.5, 0.9}) == doctest::Approx(0.1));
  CHECK(inradius_at(poly, {2.0, 0.5}) == 0.0);

  // Diagonal edges use the Euclidean distance, not the coordinate slack.
  auto tri = intersect_halfspaces_2d({
      {{Rational(-1), Rational(0)}, Rational(0)},
      {{Rational(0), Rational(-1)}, Rational(0)},
      {{Rational(1), Rational(1)}, Rational(2)},
  });
  CHECK(inradius_at(tri, {0.9, 0.9}) ==
        doctest::Approx(0.2 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_SUITE_END();
