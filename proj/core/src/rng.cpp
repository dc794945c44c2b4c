#include "qsep/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace qsep {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  // Rejection sampling over the largest multiple of bound that fits.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return v % bound;
}

long long Rng::int_in(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::int_in: empty range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<long long>(below(span));
}

double Rng::real01() {
  // 53 random bits into [0,1).
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

std::vector<std::uint32_t> Rng::sample_distinct(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("Rng::sample_distinct: k > n");
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t j = i + static_cast<std::uint32_t>(below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(stream ^ splitmix64(index)));
}

} // namespace qsep
