#include "qsep/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qsep {

namespace {

using u128 = unsigned __int128;

std::uint64_t ceil_isqrt_u128(u128 v) {
  if (v == 0) return 0;
  // Newton iteration from a floating-point guess, then exact correction.
  std::uint64_t x = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<u128>(x) * x > v) --x;
  while (static_cast<u128>(x + 1) * (x + 1) <= v) ++x;
  // x = floor(sqrt(v)); bump unless exact.
  return (static_cast<u128>(x) * x == v) ? x : x + 1;
}

std::uint64_t ceil_log2(std::uint64_t v) {
  std::uint64_t r = 0;
  std::uint64_t p = 1;
  while (p < v) {
    p <<= 1;
    ++r;
  }
  return r;
}

void validate(const QuantumConfig& cfg) {
  if (cfg.c_grover < 1.0 || cfg.c_aa < 1.0)
    throw std::invalid_argument("QuantumConfig: constants must be >= 1");
}

}  // namespace

int boost_reps(double eps) {
  if (eps <= 0.0 || eps >= 2.0) throw std::invalid_argument("boost_reps: eps out of range");
  return std::max(1, static_cast<int>(std::ceil(std::log(2.0 / eps) / std::log(3.0))));
}

std::uint64_t ceil_scaled_sqrt(double c, std::uint64_t m) {
  if (c < 0.0) throw std::invalid_argument("ceil_scaled_sqrt: negative constant");
  if (m == 0 || c == 0.0) return 0;
  const double r = std::nearbyint(c);
  if (r == c && r >= 1.0 && r <= 0x1p20) {
    const u128 ci = static_cast<u128>(static_cast<std::uint64_t>(r));
    return ceil_isqrt_u128(ci * ci * static_cast<u128>(m));
  }
  const long double v = static_cast<long double>(c) * std::sqrt(static_cast<long double>(m));
  return static_cast<std::uint64_t>(std::ceil(v));
}

std::optional<std::uint64_t> grover_search(std::uint64_t m,
                                           const std::function<bool(std::uint64_t)>& marked,
                                           const QuantumConfig& cfg, CostLedger& ledger) {
  validate(cfg);
  ledger.charge_quantum(ceil_scaled_sqrt(cfg.c_grover, m));
  for (std::uint64_t i = 0; i < m; ++i)
    if (marked(i)) return i;
  return std::nullopt;
}

bool amplitude_amplify(const std::function<bool(CostLedger&, std::uint64_t)>& sub,
                       std::uint64_t inverse_p, double eps_target,
                       const QuantumConfig& cfg, CostLedger& ledger) {
  validate(cfg);
  if (inverse_p == 0) throw std::invalid_argument("amplitude_amplify: inverse_p must be >= 1");
  if (eps_target <= 0.0 || eps_target >= 1.0)
    throw std::invalid_argument("amplitude_amplify: eps_target out of range");

  if (cfg.mode == ExecMode::charged) {
    CostLedger child = ledger.child();
    const bool ok = sub(child, 0);
    const std::uint64_t mult =
        ceil_scaled_sqrt(cfg.c_aa, inverse_p) * static_cast<std::uint64_t>(boost_reps(eps_target));
    ledger.merge_scaled(child, mult);
    ledger.aa_invocations += mult;
    return ok;
  }

  const long double budget = std::log(2.0 / eps_target) * static_cast<long double>(inverse_p);
  const std::uint64_t reps = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(budget)));
  for (std::uint64_t r = 0; r < reps; ++r) {
    CostLedger child = ledger.child();
    const bool ok = sub(child, r);
    ledger.merge_scaled(child, 1);
    ledger.aa_invocations += 1;
    if (ok) return true;
  }
  return false;
}

std::optional<ThreeSumWitness> solve_3sum(const std::vector<long long>& s,
                                          const QuantumConfig& cfg, CostLedger& ledger) {
  validate(cfg);
  const std::uint64_t n = s.size();

  // Ordered index over (value, position), built once up front.
  std::vector<std::pair<long long, std::size_t>> sorted;
  sorted.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) sorted.emplace_back(s[i], i);
  std::sort(sorted.begin(), sorted.end());
  if (n >= 2) ledger.charge_classical(n * ceil_log2(n));

  const std::uint64_t lookup_steps = ceil_log2(std::max<std::uint64_t>(n, 2)) + 2;
  std::size_t last_k = 0;
  const auto marked = [&](std::uint64_t p) -> bool {
    ledger.charge_classical(lookup_steps);
    const std::size_t i = static_cast<std::size_t>(p / n);
    const std::size_t j = static_cast<std::size_t>(p % n);
    if (i == j) return false;
    const __int128 target = -(static_cast<__int128>(s[i]) + static_cast<__int128>(s[j]));
    if (target < std::numeric_limits<long long>::min() ||
        target > std::numeric_limits<long long>::max())
      return false;
    const long long t = static_cast<long long>(target);
    auto range = std::equal_range(sorted.begin(), sorted.end(), std::make_pair(t, std::size_t{0}),
                                  [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto it = range.first; it != range.second; ++it) {
      if (it->second != i && it->second != j) {
        last_k = it->second;
        return true;
      }
    }
    return false;
  };

  const auto hit = grover_search(n * n, marked, cfg, ledger);
  if (!hit) return std::nullopt;
  const std::size_t i = static_cast<std::size_t>(*hit / n);
  const std::size_t j = static_cast<std::size_t>(*hit % n);
  const std::size_t k = last_k;
  ThreeSumWitness w{{i, j, k}, {s[i], s[j], s[k]}};
  if (static_cast<__int128>(w.values[0]) + w.values[1] + w.values[2] != 0 || i == j || j == k ||
      i == k)
    throw std::logic_error("solve_3sum: unverified witness");
  return w;
}

} // namespace qsep
