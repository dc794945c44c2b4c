#include "qsep/geometry.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>

namespace qsep {

namespace {

using i128 = __int128;

// Extracts v into a long long when |v| < 2^62.
bool to_ll(const BigInt& v, long long& out) {
  if (v.is_zero()) {
    out = 0;
    return true;
  }
  BigInt av = abs(v);
  if (boost::multiprecision::msb(av) >= 62) return false;
  out = v.convert_to<long long>();
  return true;
}

int bits_ll(long long v) {
  unsigned long long a = v < 0 ? -static_cast<unsigned long long>(v) : v;
  int b = 0;
  while (a) {
    ++b;
    a >>= 1;
  }
  return b;
}

int sign_i128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Exact sign of y - a*x - b over rationals, with an __int128 fast path for
// small operands and a big-integer fallback. Only signs are needed, so the
// cross-multiplied form skips gcd normalization entirely.
int sign_linear(const Scalar& y, const Scalar& a, const Scalar& x, const Scalar& b) {
  long long yn, yd, an, ad, xn, xd, bn, bd;
  if (to_ll(num(y), yn) && to_ll(den(y), yd) && to_ll(num(a), an) &&
      to_ll(den(a), ad) && to_ll(num(x), xn) && to_ll(den(x), xd) &&
      to_ll(num(b), bn) && to_ll(den(b), bd)) {
    int b1 = bits_ll(yn) + bits_ll(ad) + bits_ll(xd) + bits_ll(bd);
    int b2 = bits_ll(an) + bits_ll(xn) + bits_ll(yd) + bits_ll(bd);
    int b3 = bits_ll(bn) + bits_ll(yd) + bits_ll(ad) + bits_ll(xd);
    if (b1 <= 123 && b2 <= 123 && b3 <= 123) {
      i128 t1 = (i128)yn * ad;
      t1 *= xd;
      t1 *= bd;
      i128 t2 = (i128)an * xn;
      t2 *= yd;
      t2 *= bd;
      i128 t3 = (i128)bn * yd;
      t3 *= ad;
      t3 *= xd;
      return sign_i128(t1 - t2 - t3);
    }
  }
  BigInt s = num(y) * den(a) * den(x) * den(b) - num(a) * num(x) * den(y) * den(b) -
             num(b) * den(y) * den(a) * den(x);
  return s.sign();
}

int sign_diff(const Scalar& u, const Scalar& v) {
  if (u == v) return 0;
  return u < v ? -1 : 1;
}

}  // namespace

int compare_points(const Point& a, const Point& b) {
  int c = sign_diff(a.x, b.x);
  if (c != 0) return c;
  return sign_diff(a.y, b.y);
}

bool point_less(const Point& a, const Point& b) { return compare_points(a, b) < 0; }

std::size_t PointHash::operator()(const Point& p) const {
  std::size_t seed = hash_scalar(p.x);
  boost::hash_combine(seed, hash_scalar(p.y));
  return seed;
}

Line Line::non_vertical(Scalar slope, Scalar intercept) {
  Line l;
  l.vertical = false;
  l.a = std::move(slope);
  l.b = std::move(intercept);
  return l;
}

Line Line::vertical_at(Scalar x0) {
  Line l;
  l.vertical = true;
  l.x0 = std::move(x0);
  return l;
}

bool Line::operator==(const Line& o) const {
  if (vertical != o.vertical) return false;
  if (vertical) return x0 == o.x0;
  return a == o.a && b == o.b;
}

std::size_t LineHash::operator()(const Line& l) const {
  std::size_t seed = l.vertical ? 0x9e3779b97f4a7c15ull : 0x2545f4914f6cdd1dull;
  if (l.vertical) {
    boost::hash_combine(seed, hash_scalar(l.x0));
  } else {
    boost::hash_combine(seed, hash_scalar(l.a));
    boost::hash_combine(seed, hash_scalar(l.b));
  }
  return seed;
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line_through: identical points");
  if (p.x == q.x) return Line::vertical_at(p.x);
  Scalar a = (q.y - p.y) / (q.x - p.x);
  Scalar b = p.y - a * p.x;
  return Line::non_vertical(std::move(a), std::move(b));
}

int line_side(const Line& l, const Point& p) {
  if (l.vertical) return sign_diff(p.x, l.x0);
  return sign_linear(p.y, l.a, p.x, l.b);
}

bool point_on_line(const Line& l, const Point& p) { return line_side(l, p) == 0; }

LineIntersection intersect(const Line& l1, const Line& l2) {
  if (l1.vertical && l2.vertical) {
    if (l1.x0 == l2.x0) return {LineIntersection::kCoincident, {}};
    return {LineIntersection::kParallel, {}};
  }
  if (l1.vertical) {
    Scalar y = l2.a * l1.x0 + l2.b;
    return {LineIntersection::kPoint, Point{l1.x0, std::move(y)}};
  }
  if (l2.vertical) {
    Scalar y = l1.a * l2.x0 + l1.b;
    return {LineIntersection::kPoint, Point{l2.x0, std::move(y)}};
  }
  if (l1.a == l2.a) {
    if (l1.b == l2.b) return {LineIntersection::kCoincident, {}};
    return {LineIntersection::kParallel, {}};
  }
  Scalar x = (l2.b - l1.b) / (l1.a - l2.a);
  Scalar y = l1.a * x + l1.b;
  return {LineIntersection::kPoint, Point{std::move(x), std::move(y)}};
}

bool lines_parallel(const Line& l1, const Line& l2) {
  if (l1.vertical || l2.vertical) return l1.vertical && l2.vertical;
  return l1.a == l2.a;
}

int orientation(const Point& p, const Point& q, const Point& r) {
  Scalar cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return cross.sign();
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return orientation(p, q, r) == 0;
}

std::optional<Point> concurrent(const Line& l1, const Line& l2, const Line& l3) {
  if (l1 == l2 || l1 == l3 || l2 == l3)
    throw std::invalid_argument("concurrent: lines must be pairwise distinct");
  LineIntersection i12 = intersect(l1, l2);
  if (i12.kind != LineIntersection::kPoint) return std::nullopt;
  if (point_on_line(l3, i12.point)) return i12.point;
  return std::nullopt;
}

Box Box::square(const Scalar& half_width) {
  return Box{-half_width, half_width, -half_width, half_width};
}

bool Box::contains(const Point& p) const {
  return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
}

bool Box::strictly_contains(const Point& p) const {
  return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
}

std::array<Point, 4> Box::corners() const {
  return {Point{xmin, ymin}, Point{xmax, ymin}, Point{xmax, ymax}, Point{xmin, ymax}};
}

std::array<Line, 4> Box::edge_lines() const {
  return {Line::non_vertical(0, ymin), Line::vertical_at(xmax),
          Line::non_vertical(0, ymax), Line::vertical_at(xmin)};
}

Region3 classify_point(const Point& p, const Strip& s) {
  int s1 = line_side(s.b1, p);
  int s2 = line_side(s.b2, p);
  if (s1 == 0 || s2 == 0) return Region3::boundary;
  return s1 * s2 < 0 ? Region3::interior : Region3::exterior;
}

Region3 classify_point(const Point& p, const Angle& a) {
  int s1 = line_side(a.b1, p);
  int s2 = line_side(a.b2, p);
  if (s1 == 0 || s2 == 0) return Region3::boundary;
  bool in = (s1 == a.s1 && s2 == a.s2) || (s1 == -a.s1 && s2 == -a.s2);
  return in ? Region3::interior : Region3::exterior;
}

Region3 classify_point(const Point& p, const HalfPlane& h) {
  int s = line_side(h.boundary, p) * h.side;
  if (s > 0) return Region3::interior;
  if (s == 0) return Region3::boundary;
  return Region3::exterior;
}

Region3 classify_point(const Point& p, const Triangle& t) {
  int w = orientation(t.v[0], t.v[1], t.v[2]);
  if (w == 0) throw std::invalid_argument("classify_point: degenerate triangle");
  bool on_edge = false;
  for (int i = 0; i < 3; ++i) {
    int s = orientation(t.v[i], t.v[(i + 1) % 3], p) * w;
    if (s < 0) return Region3::exterior;
    if (s == 0) on_edge = true;
  }
  return on_edge ? Region3::boundary : Region3::interior;
}

Region3 classify_point(const Point& p, const Box& b) {
  if (!b.contains(p)) return Region3::exterior;
  if (b.strictly_contains(p)) return Region3::interior;
  return Region3::boundary;
}

bool segment_contains(const Segment& s, const Point& p) {
  if (!collinear(s.p, s.q, p)) return false;
  int cx = sign_diff(s.p.x, s.q.x);
  if (cx != 0) {
    // parameterize by x
    const Scalar& lo = cx < 0 ? s.p.x : s.q.x;
    const Scalar& hi = cx < 0 ? s.q.x : s.p.x;
    return p.x >= lo && p.x <= hi;
  }
  const Scalar& lo = s.p.y < s.q.y ? s.p.y : s.q.y;
  const Scalar& hi = s.p.y < s.q.y ? s.q.y : s.p.y;
  return p.y >= lo && p.y <= hi;
}

bool segment_relint_contains(const Segment& s, const Point& p) {
  return segment_contains(s, p) && !(p == s.p) && !(p == s.q);
}

bool line_meets_segment(const Line& l, const Segment& s) {
  return line_side(l, s.p) * line_side(l, s.q) <= 0;
}

bool line_meets_segment_relint(const Line& l, const Segment& s) {
  int sp = line_side(l, s.p);
  int sq = line_side(l, s.q);
  if (sp * sq < 0) return true;
  return sp == 0 && sq == 0;  // segment lies on the line
}

bool segments_meet(const Segment& a, const Segment& b) {
  int o1 = orientation(a.p, a.q, b.p);
  int o2 = orientation(a.p, a.q, b.q);
  int o3 = orientation(b.p, b.q, a.p);
  int o4 = orientation(b.p, b.q, a.q);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && segment_contains(a, b.p)) return true;
  if (o2 == 0 && segment_contains(a, b.q)) return true;
  if (o3 == 0 && segment_contains(b, a.p)) return true;
  if (o4 == 0 && segment_contains(b, a.q)) return true;
  return false;
}

bool segment_meets_triangle(const Segment& s, const Point& t0, const Point& t1,
                            const Point& t2) {
  Triangle t{{t0, t1, t2}};
  if (classify_point(s.p, t) != Region3::exterior) return true;
  if (classify_point(s.q, t) != Region3::exterior) return true;
  if (segments_meet(s, Segment{t0, t1})) return true;
  if (segments_meet(s, Segment{t1, t2})) return true;
  if (segments_meet(s, Segment{t2, t0})) return true;
  return false;
}

std::vector<Point> convex_hull(std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
  std::sort(points.begin(), points.end(), point_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::size_t n = points.size();
  if (n <= 2) return points;
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {  // all input points collinear: keep the two extremes
    return {points.front(), points.back()};
  }
  return hull;
}

Scalar doubled_area(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

}  // namespace qsep
