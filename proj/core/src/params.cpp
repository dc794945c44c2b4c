#include "qsep/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsep {

Params choose_parameters(std::size_t n, double epsilon, const ParamConfig& cfg) {
  if (epsilon <= 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("choose_parameters: epsilon must lie in (0,1)");
  if (cfg.c2 <= 1.0) throw std::invalid_argument("choose_parameters: C2 must exceed 1");

  Params p;
  p.n = n;
  p.epsilon = epsilon;
  p.base_cutoff = cfg.base_cutoff;
  p.use_base_case = n < std::max<std::size_t>(cfg.base_cutoff, 5);

  if (n >= 2) {
    const double ln_n = std::log(static_cast<double>(n));
    const double denom = std::log(cfg.c2) + std::log(ln_n);
    p.alpha = std::max(1.0, std::sqrt(2.0 * ln_n / denom));
    const double weight = 3.0 * (5.0 * ln_n + std::log(2.0 / epsilon));
    const double k_raw = std::pow(static_cast<double>(n), 1.0 / p.alpha) * weight;
    const auto clamp_k = [&](double v) -> std::size_t {
      const double hi = static_cast<double>(n) - 1.0;
      const double c = std::clamp(std::ceil(v), 4.0, std::max(4.0, hi));
      return static_cast<std::size_t>(c);
    };
    p.k_formula = clamp_k(k_raw);
    double k_eff = k_raw;
    if (cfg.cap_scale > 0.0) {
      const double cap =
          std::ceil(cfg.cap_scale * std::pow(static_cast<double>(n), cfg.cap_exponent));
      k_eff = std::min(k_eff, cap);
    }
    p.k = clamp_k(k_eff);
  } else {
    p.alpha = 1.0;
    p.k_formula = 4;
    p.k = 4;
    p.use_base_case = true;
  }
  return p;
}

std::uint64_t separation_size_bound(std::size_t n, std::size_t k, double epsilon) {
  if (n < 2 || k == 0) throw std::invalid_argument("separation_size_bound: need n >= 2, k >= 1");
  if (epsilon <= 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("separation_size_bound: epsilon must lie in (0,1)");
  const double ln_n = std::log(static_cast<double>(n));
  const double v = 3.0 * (static_cast<double>(n) / static_cast<double>(k)) *
                   (5.0 * ln_n + std::log(2.0 / epsilon));
  return static_cast<std::uint64_t>(std::ceil(v));
}

} // namespace qsep
