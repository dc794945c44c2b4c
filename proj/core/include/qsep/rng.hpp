#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qsep {

// Deterministic randomness for the whole artifact: every stochastic choice
// flows through one of these, seeded explicitly, so runs are reproducible
// from (master seed, derived stream) alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform over [0, bound) via rejection sampling; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  // Uniform over the inclusive range [lo, hi].
  long long int_in(long long lo, long long hi);

  double real01();

  // k distinct values from [0, n), uniform over k-subsets, in sampled order
  // (partial Fisher-Yates).
  std::vector<std::uint32_t> sample_distinct(std::uint32_t n, std::uint32_t k);

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Well-dispersed deterministic seed derivation so per-trial generators are
// independent of trial order: derive_seed(master, stream, index).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

} // namespace qsep
