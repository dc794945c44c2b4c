#pragma once

#include "qsep/instance.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qsep {

// One solver run's measurements. `seed` is the per-trial derived seed, so
// any row can be reproduced in isolation; `wall_seconds` is the only
// non-deterministic field.
struct BenchRecord {
  Problem problem = Problem::point_on_3_lines;
  std::size_t n = 0;
  std::size_t k = 0;     // sample size the recursion would draw at this n
  double alpha = 1.0;    // recursion-shape exponent chosen at this n
  double epsilon = 0.0;
  ExecMode mode = ExecMode::charged;
  std::uint64_t seed = 0;
  bool answer = false;
  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_steps = 0;
  int depth = 0;  // deepest recursion level reached
  double wall_seconds = 0.0;

  std::uint64_t total_cost() const { return quantum_queries + classical_steps; }
};

// Generates, solves, and measures trials x sizes instances. Per-trial seeds
// derive deterministically from (master_seed, size, trial), rows come out
// sorted by (size, trial), and a trial that throws is recorded as
// answer=false with whatever costs accrued — the sweep never aborts.
std::vector<BenchRecord> run_bench(Problem problem, const std::vector<std::size_t>& sizes,
                                   std::size_t trials, bool planted, const SolveOptions& opt,
                                   std::uint64_t master_seed);

// CSV with a fixed header; byte-identical across runs with equal inputs
// except for the wall_seconds column (always last).
std::string bench_csv(const std::vector<BenchRecord>& rows);

// Total-cost growth between consecutive instance sizes: the ratio of median
// total cost at n_hi to median total cost at n_lo, for successive sizes
// present in the rows.
struct CostRatio {
  std::size_t n_lo = 0, n_hi = 0;
  double ratio = 0.0;
};
std::vector<CostRatio> consecutive_cost_ratios(const std::vector<BenchRecord>& rows);

// Solver-vs-reference agreement over generated instances (alternating
// planted and unplanted, sizes uniform in [n_lo, n_hi] but never below the
// problem's minimum). Trials the reference checker refuses are skipped.
struct EquivalenceReport {
  std::size_t trials = 0;
  std::size_t refused = 0;
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  std::vector<std::uint64_t> mismatch_seeds;  // generator seeds, for replay

  double mismatch_rate() const {
    return compared == 0 ? 0.0 : static_cast<double>(mismatches) / static_cast<double>(compared);
  }
};

EquivalenceReport run_equivalence(Problem problem, std::size_t n_lo, std::size_t n_hi,
                                  std::size_t trials, const SolveOptions& opt,
                                  std::uint64_t master_seed);

} // namespace qsep
