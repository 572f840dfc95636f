#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tripow/power_function.hpp"
#include "tripow/thresholds.hpp"

// Shooting on the radial problem
//
//   u'' + (n-1)/r u' + f(u) = 0,   u(0) = alpha,   u'(0) = 0,
//
// looking for the alpha whose solution stays positive and decays to zero.

namespace tripow::shooting {

struct ShootingConfig {
  int n = 3;
  TriplePower f;
  double r_max = 0.0;
  double step = 1e-3;
  double decay_tol = 1e-6;
  double alpha_tol = 1e-9;
};

/// Throws DomainError unless n >= 1, r_max > 0, step > 0 and both
/// tolerances lie in (0, 1e-2).
void validate(const ShootingConfig& cfg);

/// Tunables shared by every omega of a sweep. r_max <= 0 selects
/// 200 / sqrt(omega).
struct ShootingOptions {
  double step = 1e-3;
  double r_max = 0.0;
  double decay_tol = 1e-6;
  double alpha_tol = 1e-9;
};

ShootingConfig make_config(const DoublePower& g, int n,
                           const ShootingOptions& opts = {});

enum class Outcome { Crossing, Rebound, Decay, Undetermined };

std::string_view to_string(Outcome o) noexcept;

struct Sample {
  double r;
  double u;
  double u_r;
};

struct Trajectory {
  std::vector<Sample> samples;
  Outcome outcome = Outcome::Undetermined;
};

/// Fixed-step RK4 from a series start at r = 0. Stops at the first of
/// u <= 0 (Crossing), u_r >= 0 with 0 < u < alpha (Rebound), u and u_r
/// inside the decay box (Decay), or r >= r_max (Undetermined).
/// Throws DomainError for alpha <= 0 and IntegrationError on a non-finite
/// state.
Trajectory integrate(const ShootingConfig& cfg, double alpha);

/// Same as integrate() without keeping the samples.
Outcome shoot(const ShootingConfig& cfg, double alpha);

/// E = u_r^2 / 2 + F(u), F the antiderivative of cfg.f. Negative u (the
/// final sample of a Crossing) uses the even extension F(|u|), matching the
/// odd extension of f the integrator uses past zero.
double energy(const ShootingConfig& cfg, double u, double u_r);

struct GroundState {
  double alpha_star;
  Trajectory trajectory;
  /// Energy at the last sample; zero for an exact decaying solution.
  double energy_residual;
};

enum class NotFoundReason {
  NoPositiveAntiderivative,  // F <= 0 on u > 0
  NoCrossing,                // no sign change of the outcome on the grid
  Unresolved,                // bracket collapsed without a decaying shot
};

std::string_view to_string(NotFoundReason r) noexcept;

struct NotFound {
  NotFoundReason reason;
};

using GroundStateResult = std::variant<GroundState, NotFound>;

/// Interval of initial heights worth shooting from: the first positive zero
/// of F and the largest zero of f. Empty when F has no positive part.
struct HeightBracket {
  double z_f;
  double z_top;
};

std::optional<HeightBracket> height_bracket(const TriplePower& f);

/// Scans alpha above the first zero of F, bisects the first
/// Rebound/Crossing change to alpha_tol and then keeps halving the bracket
/// with decay detection on until a shot decays.
GroundStateResult find_ground_state(const ShootingConfig& cfg);

struct SweepRow {
  double omega;
  double omega_threshold;
  double eta_threshold;
  bool predicted;
  bool found;
  std::optional<double> alpha_star;
  std::optional<std::string> error;

  bool agrees() const noexcept { return !error && predicted == found; }
};

/// One find_ground_state per omega for f = -omega u + u^p - u^q. Every
/// omega must stay 2% away from omega_{p,q} (DomainError otherwise).
/// Integration failures are recorded per row.
std::vector<SweepRow> sweep_omega(double p, double q, int n,
                                  std::span<const double> omegas,
                                  const ShootingOptions& opts = {});

struct UniquenessWitness {
  int transitions = 0;
  bool vacuous = true;
};

/// Counts Crossing <-> Rebound changes over grid_size initial heights
/// spread from just below the first zero of F to just below the largest
/// zero of f. One change is the expected witness of uniqueness.
UniquenessWitness uniqueness_scan(const ShootingConfig& cfg, int grid_size);

}  // namespace tripow::shooting
