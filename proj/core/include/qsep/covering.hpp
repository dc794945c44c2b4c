#pragma once

#include "qsep/sampling.hpp"
#include "qsep/solver.hpp"

#include <functional>
#include <optional>

namespace qsep {

// A witness search over the plane against a family of covering objects.
//
// Quests:
//  - uncovered: find a point satisfying `pred` that no object covers. A
//    point counts as uncovered when it is not interior to any object
//    (boundary contact still qualifies as a witness), or, with
//    `strict_exterior`, only when it is strictly outside every object.
//  - depth: find a point satisfying `pred` whose closed-containment count
//    over the objects is at least `depth_threshold`.
//
// Witness candidates are crossings of boundary lines (objects' boundaries,
// `pred_boundary`, `extra_universe`, and — during recursion — region
// boundaries); the depth quest additionally probes one representative point
// per boundary line so parallel families without crossings are not missed.
struct CoveringProblem {
  std::vector<CoverObject> objects;

  // Extra point constraint (empty = always true) with its O(pred_cost)
  // ledger contract, plus the lines bounding {pred true} so candidate
  // enumeration stays complete (e.g. box edges).
  std::function<bool(const Point&)> pred;
  std::uint64_t pred_cost = 1;
  std::vector<Line> pred_boundary;

  bool strict_exterior = false;

  enum class Quest { uncovered, depth };
  Quest quest = Quest::uncovered;
  std::uint64_t depth_threshold = 0;

  // Owner-less universe lines that join the sampling pool and the candidate
  // family without being classified (e.g. the target triangle's sides).
  std::vector<UniverseLine> extra_universe;
};

// Runs the recursive separation search for the problem's witness. Returns
// the witness point or nullopt ("covered" / "no such point"). Charged mode
// answers exactly up to `opt`'s covering scan limit; sampling mode misses an
// existing witness with probability at most epsilon. Throws SizeBoundError
// as the line solver does.
std::optional<Point> solve_covering(const CoveringProblem& prob, const SolveOptions& opt, Rng& rng,
                                    CostLedger& ledger);

} // namespace qsep
