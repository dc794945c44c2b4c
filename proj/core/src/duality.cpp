#include "qsep/duality.hpp"

namespace qsep {

Point dual_of_line(const Line& l) {
  if (l.vertical)
    throw std::invalid_argument("dual_of_line: vertical lines have no dual");
  return Point{l.a, -l.b};
}

Line dual_of_point(const Point& p) { return Line::non_vertical(p.x, -p.y); }

std::variant<Strip, Angle> dual_of_segment(const Segment& s) {
  if (s.p == s.q) throw std::invalid_argument("dual_of_segment: degenerate segment");
  Line d1 = dual_of_point(s.p);
  Line d2 = dual_of_point(s.q);
  if (s.p.x == s.q.x) return Strip{d1, d2};
  // For X = (u, v), line_side(dual_of_point(e), X) = sign(e.y - (u*e.x - v)),
  // the side of endpoint e relative to the line dual to X. That line meets
  // the segment iff the endpoint signs disagree (or one vanishes), i.e. the
  // product-negative wedge pair: selector (+1, -1).
  return Angle{d1, d2, 1, -1};
}

}  // namespace qsep
