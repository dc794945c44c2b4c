#pragma once

#include "qsep/geometry.hpp"

#include <variant>

namespace qsep {

// The standard point-line duality: the line y = a*x + b maps to the point
// (a, -b) and the point (a, b) maps to the line y = a*x - b. Applying either
// map twice is the identity, and incidence is preserved both ways.

// Throws std::invalid_argument for vertical lines, which have no image under
// this parameterization; callers must branch on verticals beforehand.
Point dual_of_line(const Line& l);

Line dual_of_point(const Point& p);

// A vertical segment dualizes to the strip between its endpoint duals; any
// other segment dualizes to the double wedge of its endpoint duals selected
// so that X lies in the dual iff the line dual to X meets the segment.
std::variant<Strip, Angle> dual_of_segment(const Segment& s);

}  // namespace qsep
