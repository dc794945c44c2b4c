#include "qsep/ledger.hpp"

#include <algorithm>

namespace qsep {

namespace {

LevelCost& level_slot(std::vector<LevelCost>& by_level, int depth) {
  if (by_level.size() <= static_cast<std::size_t>(depth))
    by_level.resize(static_cast<std::size_t>(depth) + 1);
  return by_level[static_cast<std::size_t>(depth)];
}

}  // namespace

void CostLedger::charge_classical(std::uint64_t steps) {
  classical_steps += steps;
  level_slot(by_level, current_depth).classical_steps += steps;
  note_depth(current_depth);
}

void CostLedger::charge_quantum(std::uint64_t queries) {
  quantum_queries += queries;
  level_slot(by_level, current_depth).quantum_queries += queries;
  note_depth(current_depth);
}

void CostLedger::note_depth(int depth) {
  max_recursion_depth = std::max(max_recursion_depth, depth);
}

CostLedger CostLedger::child() const {
  CostLedger c;
  c.current_depth = current_depth + 1;
  return c;
}

void CostLedger::merge_scaled(const CostLedger& other, std::uint64_t mult) {
  quantum_queries += other.quantum_queries * mult;
  classical_steps += other.classical_steps * mult;
  aa_invocations += other.aa_invocations * mult;
  note_depth(other.max_recursion_depth);
  if (by_level.size() < other.by_level.size()) by_level.resize(other.by_level.size());
  for (std::size_t i = 0; i < other.by_level.size(); ++i) {
    by_level[i].quantum_queries += other.by_level[i].quantum_queries * mult;
    by_level[i].classical_steps += other.by_level[i].classical_steps * mult;
  }
}

} // namespace qsep
