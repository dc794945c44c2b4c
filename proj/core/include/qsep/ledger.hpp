#pragma once

#include <cstdint>
#include <vector>

namespace qsep {

// Cost accounting for one solver run. Quantum queries and classical steps are
// tracked globally and per recursion depth; merging child ledgers (optionally
// scaled by an invocation multiplier) keeps the totals additive.
struct LevelCost {
  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_steps = 0;
};

struct CostLedger {
  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_steps = 0;
  std::uint64_t aa_invocations = 0;
  int max_recursion_depth = 0;
  // Depth at which subsequent charges land in `by_level`. Child ledgers are
  // created at parent depth + 1 so the per-level breakdown uses absolute
  // depths throughout a run.
  int current_depth = 0;
  std::vector<LevelCost> by_level;

  void charge_classical(std::uint64_t steps);
  void charge_quantum(std::uint64_t queries);

  // Records that the run reached `depth` (for max_recursion_depth).
  void note_depth(int depth);

  // Creates a ledger for a child invocation one level deeper.
  CostLedger child() const;

  // Adds `mult` copies of a child run's costs.
  void merge_scaled(const CostLedger& other, std::uint64_t mult);

  std::uint64_t total_cost() const { return quantum_queries + classical_steps; }
};

} // namespace qsep
