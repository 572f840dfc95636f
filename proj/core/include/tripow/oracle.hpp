#pragma once

#include <vector>

#include "tripow/power_function.hpp"

// Numeric cross-checks for the closed forms in power_function.hpp and
// thresholds.hpp. Nothing here calls threshold(), classify(), tilde() or
// eval_derivative(); the grid is centred on turning_point() only.

namespace tripow::oracle {

struct ScanConfig {
  int points = 4096;         // log-grid size, >= 1000
  double span = 100.0;       // grid covers [u*/span, u* span], >= 10
  double zero_band = 1e-9;   // relative to a, in (0, 1e-6]
};

/// Throws DomainError if a field is out of range.
void validate(const ScanConfig& cfg);

/// log of max_u (b u^{q-p} - c u^{r-p}) over the log grid of `cfg`. When
/// `refine` is set the best grid cell is polished by golden-section search.
double grid_log_max(const TriplePower& f, const ScanConfig& cfg,
                    bool refine = true);

/// Trichotomy from the sign of max_u (-a + b u^{q-p} - c u^{r-p}) on the
/// grid, with |max| <= zero_band * a counted as zero.
TrichotomyCase scan_classify(const TriplePower& f, const ScanConfig& cfg = {});

enum class Multiplicity { Simple, Double };

struct Root {
  double value;
  Multiplicity multiplicity;
};

/// Zeros of f on u > 0, ascending. Sizes 2 / 1 / 0 for the three cases.
struct RootSet {
  std::vector<Root> roots;

  std::size_t size() const noexcept { return roots.size(); }
  bool empty() const noexcept { return roots.empty(); }
};

/// Bisection on the bracket, either side of the turning point, to a
/// relative tolerance of 1e-12 in u.
RootSet find_roots(const TriplePower& f, const ScanConfig& cfg = {});

inline constexpr double kDefaultTildeStep = 1e-3;

struct TildeEstimate {
  double value;
  /// |(u f')' f| + u f'^2 from the same differences: the size of the two
  /// products whose difference is the result.
  double magnitude;
};

/// (u f'(u))' f(u) - u f'(u)^2 using only eval(f, .): five-point central
/// differences with step h = h_scale * u, nested for (u f')'.
/// Throws DomainError for u <= 0 or h_scale outside (0, 0.05].
TildeEstimate tilde_fd_detailed(const TriplePower& f, double u,
                                double h_scale = kDefaultTildeStep);

inline double tilde_fd(const TriplePower& f, double u,
                       double h_scale = kDefaultTildeStep) {
  return tilde_fd_detailed(f, u, h_scale).value;
}

}  // namespace tripow::oracle
