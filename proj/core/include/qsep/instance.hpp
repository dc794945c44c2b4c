#pragma once

#include "qsep/oracles.hpp"
#include "qsep/solver.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qsep {

// Every search problem the library answers, in one tag. The token names are
// the stable CLI / file-format identifiers.
enum class Problem {
  point_on_3_lines,
  three_points_on_line,
  general_covering,
  strips_cover_box,
  triangles_cover_triangle,
  point_covering,
  visibility,
  segment_separator,
  three_sum,
};

inline constexpr std::array<Problem, 9> kAllProblems = {
    Problem::point_on_3_lines,      Problem::three_points_on_line,
    Problem::general_covering,      Problem::strips_cover_box,
    Problem::triangles_cover_triangle, Problem::point_covering,
    Problem::visibility,            Problem::segment_separator,
    Problem::three_sum,
};

std::string_view problem_token(Problem p);
std::optional<Problem> problem_from_token(std::string_view token);

// Smallest n the generator accepts (solvers themselves take any size).
std::size_t problem_min_n(Problem p);

// One solvable input plus its provenance metadata. A plain record: only the
// payload fields of `problem` are meaningful, the rest stay default-valued
// (equality therefore compares dormant fields too, which parse/serialize
// round-trips preserve).
struct Instance {
  Problem problem = Problem::point_on_3_lines;
  std::uint64_t seed = 0;
  bool planted = false;
  // True when the planted/unplanted status is certain: either proved by the
  // construction or confirmed by a reference checker at generation time.
  bool verified = false;
  // Planted instances may embed the witness the construction proved (in the
  // solver's working plane, so dual problems store the dual point). It feeds
  // SolveOptions::witness_hint so charged-mode descent above the exact-scan
  // limits stays deterministic; negatives and sampling mode never use it.
  std::optional<Point> hint;

  std::vector<Line> lines;            // point-on-3-lines
  std::vector<Point> points;          // 3-points-on-line
  std::vector<CoverObject> objects;   // general-covering (predicate == always true)
  std::vector<Strip> strips;          // strips-cover-box
  Box box{};                          // strips-cover-box
  std::vector<Triangle> triangles;    // triangles-cover-triangle (covering family)
  Triangle target{};                  // triangles-cover-triangle
  std::vector<HalfPlane> halfplanes;  // point-covering
  std::uint64_t threshold = 0;        // point-covering
  std::vector<Segment> segments;      // visibility obstacles / separator segments
  Segment s1{}, s2{};                 // visibility terminals
  std::vector<long long> values;      // 3sum

  // The object count the header's n= field records.
  std::size_t size() const;

  bool operator==(const Instance&) const = default;
};

// The problem-shaped positive answers.
using AnswerWitness = std::variant<std::monostate,             // none
                                   TripleWitness,              // point-on-3-lines
                                   std::array<std::size_t, 3>, // 3-points-on-line
                                   Point,                      // covering witnesses
                                   Line,                       // sight line / separator
                                   ThreeSumWitness>;           // 3sum

struct SolveOutcome {
  bool found = false;
  AnswerWitness witness;  // monostate iff !found
};

// Dispatches to the problem's solver. Throws what the solvers throw
// (std::invalid_argument on malformed input, SizeBoundError, ...).
SolveOutcome solve_instance(const Instance& inst, const SolveOptions& opt, Rng& rng,
                            CostLedger& ledger);

// Dispatches to the problem's brute-force reference checker at its default
// size cap; `refused` means the instance is too large for a verdict.
OracleStatus oracle_instance(const Instance& inst);

// Human-readable one-line witness description ("lines 3 17 42 concurrent at
// (1/2, -3)" and the like); "none" when not found.
std::string describe_outcome(const Instance& inst, const SolveOutcome& out);

} // namespace qsep
