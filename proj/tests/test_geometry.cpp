#include <doctest.h>

#include "qsep/geometry.hpp"

#include <random>

using namespace qsep;

namespace {

Point pt(long long x, long long y) { return Point{Scalar(x), Scalar(y)}; }
Line nv(long long a, long long b) { return Line::non_vertical(Scalar(a), Scalar(b)); }

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("intersect: crossing, parallel, coincident") {
  auto r = intersect(nv(1, 0), nv(-1, 2));
  REQUIRE(r.kind == LineIntersection::kPoint);
  CHECK(r.point == pt(1, 1));

  CHECK(intersect(nv(2, 1), nv(2, 3)).kind == LineIntersection::kParallel);
  CHECK(intersect(nv(3, -5), nv(3, -5)).kind == LineIntersection::kCoincident);
}

TEST_CASE("intersect with verticals") {
  auto r = intersect(Line::vertical_at(Scalar(2)), nv(1, 1));
  REQUIRE(r.kind == LineIntersection::kPoint);
  CHECK(r.point == pt(2, 3));

  CHECK(intersect(Line::vertical_at(Scalar(1)), Line::vertical_at(Scalar(2))).kind ==
        LineIntersection::kParallel);
  CHECK(intersect(Line::vertical_at(Scalar(1)), Line::vertical_at(Scalar(1))).kind ==
        LineIntersection::kCoincident);
}

TEST_CASE("orientation signs and antisymmetry") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(1, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(1, -1)) == -1);

  std::mt19937_64 eng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 200; ++i) {
    Point a = pt(d(eng), d(eng)), b = pt(d(eng), d(eng)), c = pt(d(eng), d(eng));
    CHECK(orientation(a, b, c) == -orientation(b, a, c));
    CHECK(orientation(a, b, c) == -orientation(a, c, b));
  }
}

TEST_CASE("concurrent triples") {
  auto w = concurrent(nv(1, 0), nv(-1, 0), nv(0, 0));
  REQUIRE(w.has_value());
  CHECK(*w == pt(0, 0));

  CHECK(!concurrent(nv(1, 0), nv(1, 1), nv(0, 0)).has_value());

  // y=0 and x=2 meet at (2,0), which is not on y=x.
  CHECK(!concurrent(nv(0, 0), nv(1, 0), Line::vertical_at(Scalar(2))).has_value());

  CHECK_THROWS_AS((void)concurrent(nv(1, 0), nv(1, 0), nv(0, 0)), std::invalid_argument);
}

TEST_CASE("line_side conventions") {
  Line l = nv(2, 3);  // y = 2x + 3
  CHECK(line_side(l, pt(0, 5)) == 1);
  CHECK(line_side(l, pt(0, 3)) == 0);
  CHECK(line_side(l, pt(0, 0)) == -1);

  Line v = Line::vertical_at(Scalar(2));
  CHECK(line_side(v, pt(3, 0)) == 1);
  CHECK(line_side(v, pt(2, 9)) == 0);
  CHECK(line_side(v, pt(1, 0)) == -1);
}

TEST_CASE("line_side exactness beyond 64-bit products") {
  // Coordinates engineered so cross products overflow int64 but not the
  // exact predicate: y - a*x - b with huge numerators.
  Scalar big = Scalar(BigInt("123456789123456789123456789"));
  Line l = Line::non_vertical(big, Scalar(1));
  Point on{Scalar(1), big + 1};
  CHECK(line_side(l, on) == 0);
  Point above{Scalar(1), big + 2};
  CHECK(line_side(l, above) == 1);
}

TEST_CASE("line_through round-trips incidence") {
  Point p = pt(-3, 7), q = pt(5, -2);
  Line l = line_through(p, q);
  CHECK(point_on_line(l, p));
  CHECK(point_on_line(l, q));
  Line v = line_through(pt(4, 0), pt(4, 9));
  CHECK(v.vertical);
  CHECK(v.x0 == 4);
}

TEST_CASE("classify_point against a strip") {
  Strip s{nv(0, -1), nv(0, 1)};  // between y=-1 and y=1
  CHECK(classify_point(pt(0, 0), s) == Region3::interior);
  CHECK(classify_point(pt(0, 1), s) == Region3::boundary);
  CHECK(classify_point(pt(0, 5), s) == Region3::exterior);
}

TEST_CASE("classify_point against an angle (double wedge)") {
  // Lines y=x and y=-x with selector (+1,-1): interior is the left-right
  // wedge pair where the side signs disagree.
  Angle a{nv(1, 0), nv(-1, 0), 1, -1};
  CHECK(classify_point(pt(2, 0), a) == Region3::interior);
  CHECK(classify_point(pt(-2, 0), a) == Region3::interior);  // opposite wedge
  CHECK(classify_point(pt(0, 2), a) == Region3::exterior);
  CHECK(classify_point(pt(0, -2), a) == Region3::exterior);
  CHECK(classify_point(pt(1, 1), a) == Region3::boundary);
  CHECK(classify_point(pt(0, 0), a) == Region3::boundary);
}

TEST_CASE("classify_point against halfplane, triangle, box") {
  HalfPlane h{nv(0, 0), 1};  // y >= 0
  CHECK(classify_point(pt(0, 3), h) == Region3::interior);
  CHECK(classify_point(pt(9, 0), h) == Region3::boundary);
  CHECK(classify_point(pt(0, -1), h) == Region3::exterior);

  Triangle t{{pt(0, 0), pt(4, 0), pt(0, 4)}};
  CHECK(classify_point(pt(1, 1), t) == Region3::interior);
  CHECK(classify_point(pt(2, 0), t) == Region3::boundary);
  CHECK(classify_point(pt(2, 2), t) == Region3::boundary);  // hypotenuse
  CHECK(classify_point(pt(5, 0), t) == Region3::exterior);  // on edge extension
  CHECK(classify_point(pt(3, 3), t) == Region3::exterior);

  Box b{Scalar(-1), Scalar(2), Scalar(-1), Scalar(1)};
  CHECK(classify_point(pt(0, 0), b) == Region3::interior);
  CHECK(classify_point(pt(2, 0), b) == Region3::boundary);
  CHECK(classify_point(pt(3, 0), b) == Region3::exterior);
}

TEST_CASE("segment membership and crossings") {
  Segment s{pt(1, 0), pt(1, 2)};
  CHECK(segment_contains(s, pt(1, 1)));
  CHECK(segment_contains(s, pt(1, 0)));
  CHECK(!segment_contains(s, pt(1, 3)));
  CHECK(segment_relint_contains(s, pt(1, 1)));
  CHECK(!segment_relint_contains(s, pt(1, 0)));

  CHECK(line_meets_segment(nv(0, 1), s));         // y=1 crosses interior
  CHECK(line_meets_segment(nv(0, 0), s));         // y=0 touches endpoint
  CHECK(line_meets_segment_relint(nv(0, 1), s));
  CHECK(!line_meets_segment_relint(nv(0, 0), s)); // endpoint graze only
  CHECK(!line_meets_segment(nv(0, 3), s));
  CHECK(line_meets_segment_relint(Line::vertical_at(Scalar(1)), s));  // contains it
}

TEST_CASE("segments_meet covers touch and overlap cases") {
  CHECK(segments_meet({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)}));
  CHECK(segments_meet({pt(0, 0), pt(2, 0)}, {pt(2, 0), pt(3, 5)}));   // endpoint touch
  CHECK(segments_meet({pt(0, 0), pt(4, 0)}, {pt(1, 0), pt(2, 0)}));   // collinear overlap
  CHECK(!segments_meet({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)}));  // collinear disjoint
  CHECK(!segments_meet({pt(0, 0), pt(1, 1)}, {pt(3, 0), pt(3, 9)}));
}

TEST_CASE("segment_meets_triangle") {
  Point a = pt(0, 0), b = pt(6, 0), c = pt(0, 6);
  CHECK(segment_meets_triangle({pt(1, 1), pt(2, 2)}, a, b, c));    // inside
  CHECK(segment_meets_triangle({pt(-1, 1), pt(7, 1)}, a, b, c));   // straddles
  CHECK(segment_meets_triangle({pt(6, 0), pt(9, 0)}, a, b, c));    // vertex touch
  CHECK(!segment_meets_triangle({pt(7, 7), pt(9, 9)}, a, b, c));
}

TEST_CASE("convex hull: examples") {
  auto h3 = convex_hull({pt(0, 0), pt(4, 0), pt(0, 4)});
  CHECK(h3.size() == 3);

  auto h4 = convex_hull({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)});
  CHECK(h4.size() == 4);

  auto col = convex_hull({pt(0, 0), pt(1, 1), pt(2, 2), pt(3, 3)});
  REQUIRE(col.size() == 2);
  CHECK(col[0] == pt(0, 0));
  CHECK(col[1] == pt(3, 3));
}

TEST_CASE("convex hull: random sets verified by half-plane check") {
  std::mt19937_64 eng(11);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Point> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(pt(d(eng), d(eng)));
    auto hull = convex_hull(pts);
    REQUIRE(hull.size() >= 3);
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point& u = hull[i];
      const Point& v = hull[(i + 1) % hull.size()];
      for (const Point& p : pts) CHECK(orientation(u, v, p) >= 0);
    }
    // strictness: hull vertices are corners, not edge-interior points
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point& prev = hull[(i + hull.size() - 1) % hull.size()];
      const Point& cur = hull[i];
      const Point& next = hull[(i + 1) % hull.size()];
      CHECK(orientation(prev, cur, next) > 0);
    }
  }
}

TEST_SUITE_END();
