#pragma once

#include <cstddef>
#include <cstdint>

namespace qsep {

// Tunables for parameter selection. The asymptotic formula for the sample
// size k exceeds n itself for every n reachable in practice (it only drops
// below n around n ~ 10^4 and stays within a small factor of n far beyond),
// so the effective k is additionally capped by ceil(scale * n^exponent);
// set cap_scale to 0 to disable the cap and use the formula verbatim.
struct ParamConfig {
  double c2 = 8.0;
  std::size_t base_cutoff = 64;
  double cap_scale = 1.9;
  double cap_exponent = 0.40;
};

struct Params {
  std::size_t n = 0;
  double epsilon = 0.0;
  double alpha = 1.0;       // sqrt(2 ln n / (ln C2 + ln ln n)), floored at 1
  std::size_t k_formula = 0; // ceil(n^(1/alpha) * 3(5 ln n + ln(2/eps))), clamped to [4, n-1]
  std::size_t k = 0;         // effective sample size: min(k_formula, cap), clamped to [4, n-1]
  std::size_t base_cutoff = 64;
  bool use_base_case = false; // instance small enough for the classical base case
};

// Evaluates the sample-size formulas with natural logs and applies clamps.
Params choose_parameters(std::size_t n, double epsilon, const ParamConfig& cfg = {});

// Threshold for the crossing-set size check after one random separation of n
// lines by k sample lines: ceil(3 * (n/k) * (5 ln n + ln(2/eps))). A fresh
// separation exceeds it only with probability <= eps/2.
std::uint64_t separation_size_bound(std::size_t n, std::size_t k, double epsilon);

} // namespace qsep
