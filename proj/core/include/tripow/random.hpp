#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "tripow/power_function.hpp"

namespace tripow {

/// SplitMix64: the k-th output is a fixed mix of seed + k * 0x9e3779b97f4a7c15,
/// so streams are identical on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return double((*this)() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  double log_uniform(double lo, double hi) noexcept {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

 private:
  std::uint64_t state_;
};

/// Sampling ranges for random triple powers.
struct TripleSampling {
  double coeff_lo = 1e-3;
  double coeff_hi = 1e3;
  double exp_lo = 0.1;
  double exp_hi = 8.0;
  double min_gap = 0.1;
  /// Reject draws with p + q <= 1 so tilde() is defined.
  bool tilde_ready = true;
};

/// Log-uniform coefficients and sorted uniform exponents with pairwise gaps
/// of at least min_gap (rejection sampling).
inline TriplePower random_triple(SplitMix64& rng,
                                 const TripleSampling& s = {}) {
  for (;;) {
    std::array<double, 3> e{rng.uniform(s.exp_lo, s.exp_hi),
                            rng.uniform(s.exp_lo, s.exp_hi),
                            rng.uniform(s.exp_lo, s.exp_hi)};
    std::sort(e.begin(), e.end());
    const double a = rng.log_uniform(s.coeff_lo, s.coeff_hi);
    const double b = rng.log_uniform(s.coeff_lo, s.coeff_hi);
    const double c = rng.log_uniform(s.coeff_lo, s.coeff_hi);
    if (e[1] - e[0] < s.min_gap || e[2] - e[1] < s.min_gap) continue;
    if (s.tilde_ready && e[0] + e[1] <= 1.0) continue;
    return {a, b, c, e[0], e[1], e[2]};
  }
}

}  // namespace tripow
