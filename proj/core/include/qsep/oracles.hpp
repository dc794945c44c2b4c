#pragma once

#include "qsep/geometry.hpp"
#include "qsep/quantum.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace qsep {

// Brute-force reference checkers. They share only the elementary geometric
// predicates with the solvers — no sampling, no recursion, no shared search
// machinery — so agreement between the two is meaningful evidence.
//
// Every oracle refuses instances above its size cap instead of silently
// taking minutes; callers treat `refused` as "no verdict".
enum class OracleStatus { positive, negative, refused };

struct Oracle3SumReport {
  OracleStatus status = OracleStatus::refused;
  std::optional<ThreeSumWitness> witness;
};

// Exhaustive cubic scan over index triples i < j < k.
Oracle3SumReport oracle_3sum(const std::vector<long long>& s, std::size_t cap = 150);

struct OracleTripleReport {
  OracleStatus status = OracleStatus::refused;
  std::optional<std::array<std::size_t, 3>> indices;  // ascending original indices
  std::optional<Point> point;
};

// Groups all pairwise line intersections by exact coordinates; a point hit
// by three or more distinct lines is a witness. Three coincident copies of
// one line also count as positive. Quadratic space and n^2 log n time.
OracleTripleReport oracle_point_on_3_lines(const std::vector<Line>& lines, std::size_t cap = 512);

// Cubic orientation scan for three collinear points. Point lists must be
// duplicate-free (a multiset is not a point set); duplicates are refused.
OracleTripleReport oracle_3_points_on_line(const std::vector<Point>& points, std::size_t cap = 150);

struct OraclePointReport {
  OracleStatus status = OracleStatus::refused;
  std::optional<Point> witness;
};

// Coverage checks by exhausting the cells of the full subdivision induced by
// every boundary line involved (object boundaries plus the box or target
// edges): each vertex, an interior point of each edge, and an interior point
// of each face is tested with exact predicates. Coverage status is constant
// on every cell, so this sampling is decision-complete.
OraclePointReport oracle_box_uncovered(const std::vector<Strip>& strips, const Box& box,
                                       std::size_t cap = 48);
OraclePointReport oracle_triangle_uncovered(const std::vector<Triangle>& cover,
                                            const Triangle& target, std::size_t cap = 48);
// A point lying in at least `threshold` closed half-planes, if one exists.
OraclePointReport oracle_depth_point(const std::vector<HalfPlane>& halfplanes,
                                     std::uint64_t threshold, std::size_t cap = 48);

// Exhaustive scan of every crossing of two object boundary lines (the
// candidate family the covering answer contract draws from, an angle's own
// apex included): a crossing interior to no object is a witness. Families
// whose boundary lines are pairwise parallel have no crossings and answer
// negative.
OraclePointReport oracle_general_covering(const std::vector<CoverObject>& objects,
                                          std::size_t cap = 48);

struct OracleLineReport {
  OracleStatus status = OracleStatus::refused;
  std::optional<Line> witness;
};

// Tries every line through two endpoints (obstacles' and s1/s2's) as a sight
// line: it must meet both closed segments and strictly miss every closed
// obstacle. All segments must be vertical; instances where s1 and s2 share
// an abscissa are refused (that configuration needs lines outside the
// endpoint-pair family).
OracleLineReport oracle_visibility(const std::vector<Segment>& obstacles, const Segment& s1,
                                   const Segment& s2, std::size_t cap = 60);

// Tries every line through endpoints of two different vertical segments as a
// separator: it must cross no segment's relative interior and leave at least
// one segment (counted by its relative interior) strictly on each side.
OracleLineReport oracle_separator(const std::vector<Segment>& segments, std::size_t cap = 60);

} // namespace qsep
