#pragma once

#include "qsep/covering.hpp"
#include "qsep/duality.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

namespace qsep {

// Every problem below runs on the same recursive separation engine (directly,
// or through the covering wrapper) and inherits its execution modes, cost
// accounting, and failure semantics. Positive answers carry exact witnesses
// re-verified before return; std::invalid_argument flags malformed input.

// Three collinear points among pairwise-distinct points. Vertical triples
// (three points sharing an x) are resolved by a direct pre-pass; the rest is
// the concurrent-lines search on the dual lines.
std::optional<std::array<std::size_t, 3>> solve_3_points_on_line(const std::vector<Point>& points,
                                                                 const SolveOptions& opt, Rng& rng,
                                                                 CostLedger& ledger);

// Arbitrary covering objects against a point predicate: finds a crossing of
// two boundary lines (object boundaries, `pred_boundary`, or — during
// recursion — region boundaries) that is not interior to any object and
// satisfies `pred`. Returns nullopt when no such crossing exists.
std::optional<Point> solve_general_covering(const std::vector<CoverObject>& objects,
                                            std::function<bool(const Point&)> pred,
                                            std::vector<Line> pred_boundary,
                                            const SolveOptions& opt, Rng& rng, CostLedger& ledger);

// Do the strips jointly cover the closed box? Returns a point of the box
// interior to no strip if not (boundary contact does not count as covered).
std::optional<Point> solve_strips_cover_box(const std::vector<Strip>& strips, const Box& box,
                                            const SolveOptions& opt, Rng& rng, CostLedger& ledger);

// Do the covering triangles jointly cover the closed target triangle?
// Returns an exposed point of the target if not.
std::optional<Point> solve_triangles_cover_triangle(const std::vector<Triangle>& cover,
                                                    const Triangle& target,
                                                    const SolveOptions& opt, Rng& rng,
                                                    CostLedger& ledger);

// A point contained (closed) in at least `threshold` of the half-planes.
std::optional<Point> solve_point_covering(const std::vector<HalfPlane>& halfplanes,
                                          std::uint64_t threshold, const SolveOptions& opt,
                                          Rng& rng, CostLedger& ledger);

// A sight line meeting both closed segments s1 and s2 while strictly
// avoiding every closed obstacle segment. All segments must be vertical;
// obstacles are searched in the dual plane, where each becomes a strip.
std::optional<Line> solve_visibility_between_segments(const std::vector<Segment>& obstacles,
                                                      const Segment& s1, const Segment& s2,
                                                      const SolveOptions& opt, Rng& rng,
                                                      CostLedger& ledger);

// A line through endpoints of two different vertical segments that crosses
// no segment's relative interior and leaves at least one segment (counted by
// its relative interior) strictly on each side.
std::optional<Line> solve_segment_separator(const std::vector<Segment>& segments,
                                            const SolveOptions& opt, Rng& rng, CostLedger& ledger);

} // namespace qsep
