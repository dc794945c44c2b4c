#pragma once

#include "qsep/ledger.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace qsep {

// Execution modes for the emulated quantum subroutines.
//  - charged: deterministic answers; quantum costs charged to the ledger at
//    the modeled rates (the figure of merit).
//  - sampling: randomized structure actually executed (fresh repetitions,
//    random choices) so success probabilities can be measured; its ledger
//    totals are not cost-representative.
enum class ExecMode { charged, sampling };

struct QuantumConfig {
  ExecMode mode = ExecMode::charged;
  double c_grover = 1.0; // >= 1
  double c_aa = 2.0;     // >= 1
};

// Repetitions needed to boost a success-probability-2/3 subroutine until its
// failure probability drops to eps/2: ceil(log(2/eps) / log 3).
int boost_reps(double eps);

// ceil(c * sqrt(m)), computed with exact integer arithmetic whenever c is a
// small positive integer so charge counts are reproducible bit-for-bit.
std::uint64_t ceil_scaled_sqrt(double c, std::uint64_t m);

// Unstructured search over [0, m). Returns a marked index if any exists and
// charges exactly ceil(C_g * sqrt(m)) quantum queries. The predicate runs
// classically during emulation; any classical cost it wants on the ledger is
// charged by the predicate itself (capture the ledger in the closure).
std::optional<std::uint64_t> grover_search(std::uint64_t m,
                                           const std::function<bool(std::uint64_t)>& marked,
                                           const QuantumConfig& cfg, CostLedger& ledger);

// Amplification of a one-sided-error subroutine whose success probability is
// at least 1/inverse_p. `sub` receives a child ledger plus a repetition
// index and must return true only for an independently verified witness
// (witness data travels through the caller's closure state).
//   charged:  runs the deterministic success path once and books
//             ceil(C_aa * sqrt(inverse_p)) * boost_reps(eps) copies of its
//             cost; the return value is that single run's outcome.
//   sampling: really re-runs `sub` with fresh randomness up to
//             ceil(ln(2/eps) * inverse_p) times and returns on the first
//             verified success (failure probability <= eps/2).
bool amplitude_amplify(const std::function<bool(CostLedger&, std::uint64_t)>& sub,
                       std::uint64_t inverse_p, double eps_target,
                       const QuantumConfig& cfg, CostLedger& ledger);

struct ThreeSumWitness {
  std::array<std::size_t, 3> indices; // pairwise distinct positions
  std::array<long long, 3> values;    // sum to zero
};

// Searches for three distinct positions whose values sum to zero: unstructured
// search over the n^2 ordered pairs with an ordered-index lookup for the
// completing value. Charges exactly ceil(C_g * n) quantum queries plus
// O(log n) classical steps per evaluated pair.
std::optional<ThreeSumWitness> solve_3sum(const std::vector<long long>& s,
                                          const QuantumConfig& cfg, CostLedger& ledger);

} // namespace qsep
