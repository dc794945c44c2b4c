#pragma once

#include "qsep/params.hpp"
#include "qsep/quantum.hpp"
#include "qsep/sampling.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qsep {

// Three input-line indices concurrent at `point`.
struct TripleWitness {
  std::array<std::size_t, 3> indices;  // ascending, into the caller's list
  Point point;
};

struct SolveOptions {
  double epsilon = 0.1;
  QuantumConfig quantum{};  // mode + cost constants
  ParamConfig params{};     // recursion parameter knobs
  int retry_budget = 3;     // separation restarts per level
  std::uint64_t forced_bound = 0;  // test knob: overrides the size bound

  // Charged-mode emulation advice: a point known to lie on three input
  // lines (e.g. from a planted generator). The deterministic descent
  // follows the regions containing it without paying wall-clock for a full
  // quadratic scan. Never consulted in sampling mode.
  std::optional<Point> witness_hint;

  // In charged mode, instances up to this size locate the true witness with
  // an uncharged exact scan (the emulated oracle), making answers exact.
  // Above it, descent follows the hint or a deterministic representative
  // region; negatives are then best-effort (cost stays representative).
  std::size_t charged_scan_limit = 600;

  // Same idea for covering problems, measured in universe lines. Covering
  // scans evaluate every boundary-line crossing against every object, so the
  // affordable cutoff is lower than the line solver's pair scan.
  std::size_t covering_scan_limit = 150;
};

// Finds three concurrent lines. Duplicate lines are collapsed first; three
// copies of one line count as an immediate positive. Witnesses are exact and
// re-verified before return. Sampling mode fails (returns nullopt) on a
// positive instance with probability at most epsilon. Throws SizeBoundError
// when some level's separation exceeded its crossing bound past the retry
// budget.
std::optional<TripleWitness> solve_point_on_3_lines(const std::vector<Line>& lines,
                                                    const SolveOptions& opt, Rng& rng,
                                                    CostLedger& ledger);

} // namespace qsep
