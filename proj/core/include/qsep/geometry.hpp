#pragma once

#include "qsep/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace qsep {

struct Point {
  Scalar x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Lexicographic (x, then y); total order used for canonical choices.
int compare_points(const Point& a, const Point& b);
bool point_less(const Point& a, const Point& b);

struct PointHash {
  std::size_t operator()(const Point& p) const;
};

// A line is either y = a*x + b or the vertical x = x0. The unused fields are
// kept at zero so equality and hashing are structural.
struct Line {
  bool vertical = false;
  Scalar a, b;  // slope/intercept when non-vertical
  Scalar x0;    // abscissa when vertical

  static Line non_vertical(Scalar slope, Scalar intercept);
  static Line vertical_at(Scalar x0);
  bool operator==(const Line& o) const;
};

struct LineHash {
  std::size_t operator()(const Line& l) const;
};

// Unique line through two distinct points.
Line line_through(const Point& p, const Point& q);

// Sign of p relative to l: non-vertical lines compare y - (a*x + b), vertical
// lines compare x - x0. Zero means incidence.
int line_side(const Line& l, const Point& p);
bool point_on_line(const Line& l, const Point& p);

struct LineIntersection {
  enum Kind { kPoint, kParallel, kCoincident };
  Kind kind;
  Point point;  // meaningful only when kind == kPoint
};

LineIntersection intersect(const Line& l1, const Line& l2);
bool lines_parallel(const Line& l1, const Line& l2);

// Sign of the cross product (q - p) x (r - p).
int orientation(const Point& p, const Point& q, const Point& r);
bool collinear(const Point& p, const Point& q, const Point& r);

// Common point of three pairwise-distinct lines, if one exists.
// Throws std::invalid_argument when any two lines are equal.
std::optional<Point> concurrent(const Line& l1, const Line& l2, const Line& l3);

struct Segment {
  Point p, q;  // p != q
  bool operator==(const Segment&) const = default;
};

struct Strip {
  Line b1, b2;  // parallel, distinct
  bool operator==(const Strip&) const = default;
};

// One pair of opposite wedges of two crossing lines. The selector fixes the
// pair: a point is interior when its side signs equal (s1, s2) or the
// negation (-s1, -s2).
struct Angle {
  Line b1, b2;  // non-parallel
  int s1 = 1, s2 = -1;
  bool operator==(const Angle&) const = default;
};

struct HalfPlane {
  Line boundary;
  int side = 1;  // sign of line_side for contained points
  bool operator==(const HalfPlane&) const = default;
};

struct Triangle {
  std::array<Point, 3> v;  // non-collinear
  bool operator==(const Triangle&) const = default;
};

struct Box {
  Scalar xmin, xmax, ymin, ymax;  // xmin < xmax, ymin < ymax

  bool operator==(const Box&) const = default;
  static Box square(const Scalar& half_width);
  bool contains(const Point& p) const;          // closed
  bool strictly_contains(const Point& p) const;
  std::array<Point, 4> corners() const;         // CCW from (xmin, ymin)
  std::array<Line, 4> edge_lines() const;       // bottom, right, top, left
  Scalar width() const { return xmax - xmin; }
  Scalar height() const { return ymax - ymin; }
};

// Any of the closed convex (or double-wedge) covering shapes.
using CoverObject = std::variant<Strip, Angle, HalfPlane, Triangle>;

enum class Region3 { interior, boundary, exterior };

Region3 classify_point(const Point& p, const Strip& s);
Region3 classify_point(const Point& p, const Angle& a);
Region3 classify_point(const Point& p, const HalfPlane& h);
Region3 classify_point(const Point& p, const Triangle& t);
Region3 classify_point(const Point& p, const Box& b);

// Closed / relative-interior membership of a point on a segment.
bool segment_contains(const Segment& s, const Point& p);
bool segment_relint_contains(const Segment& s, const Point& p);

// Does l meet the closed segment / its relative interior?
bool line_meets_segment(const Line& l, const Segment& s);
bool line_meets_segment_relint(const Line& l, const Segment& s);

// Closed segment-vs-segment intersection test, collinear overlap included.
bool segments_meet(const Segment& a, const Segment& b);

// Does the closed segment meet the closed triangle with the given vertices?
bool segment_meets_triangle(const Segment& s, const Point& t0, const Point& t1,
                            const Point& t2);

// Counter-clockwise convex hull, collinear interior points excluded.
// Duplicates in the input are tolerated. A single point or a collinear set
// returns the extreme points (possibly fewer than 3).
std::vector<Point> convex_hull(std::vector<Point> points);

// Twice the signed area of the triangle (p, q, r).
Scalar doubled_area(const Point& p, const Point& q, const Point& r);

}  // namespace qsep
