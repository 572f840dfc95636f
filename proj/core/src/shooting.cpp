#include "tripow/shooting.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <cmath>
#include <string>
#include <thread>

#include "tripow/errors.hpp"
#include "tripow/oracle.hpp"

namespace tripow::shooting {

namespace {

// Runs fn(i) for i in [0, count) on a small worker pool; results land in
// input order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(
      count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

// Odd extension below zero so RK stages that overshoot u = 0 stay defined.
// A NaN stage propagates so run() reports it as an integration failure.
double force(const TriplePower& f, double u) {
  if (std::isnan(u)) return u;
  return u >= 0.0 ? eval(f, u) : -eval(f, -u);
}

struct State {
  double u;
  double v;  // u_r
};

// y' = (v, -(n-1)/r v - f(u)), r > 0.
State rhs(const TriplePower& f, double damping, double r, const State& y) {
  return {y.v, -damping / r * y.v - force(f, y.u)};
}

State rk4_step(const TriplePower& f, double damping, double r, double h,
               const State& y) {
  const State k1 = rhs(f, damping, r, y);
  const State k2 =
      rhs(f, damping, r + 0.5 * h, {y.u + 0.5 * h * k1.u, y.v + 0.5 * h * k1.v});
  const State k3 =
      rhs(f, damping, r + 0.5 * h, {y.u + 0.5 * h * k2.u, y.v + 0.5 * h * k2.v});
  const State k4 = rhs(f, damping, r + h, {y.u + h * k3.u, y.v + h * k3.v});
  return {y.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
          y.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v)};
}

// Series solution about r = 0:
//   u = alpha - f h^2 / (2n) + f f' h^4 / (8 n (n+2)) + O(h^6).
State series_start(const TriplePower& f, int n, double alpha, double h) {
  const double fa = eval(f, alpha);
  const double dfa = eval_derivative(f, alpha, 1);
  const double nn = n;
  const double h2 = h * h;
  const double quartic = fa * dfa / (8.0 * nn * (nn + 2.0));
  return {alpha - fa * h2 / (2.0 * nn) + quartic * h2 * h2,
          -fa * h / nn + 4.0 * quartic * h2 * h};
}

template <class OnSample>
Outcome run(const ShootingConfig& cfg, double alpha, double decay_tol,
            OnSample&& on_sample) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("integrate requires alpha > 0");
  const TriplePower& f = cfg.f;
  const double h = cfg.step;
  const double damping = cfg.n - 1.0;
  const double slope_tol = decay_tol * std::sqrt(f.a());

  on_sample(Sample{0.0, alpha, 0.0});
  State y = series_start(f, cfg.n, alpha, h);
  double last_r = 0.0;
  for (long k = 1;; ++k) {
    const double r = k * h;
    if (!std::isfinite(y.u) || !std::isfinite(y.v))
      throw IntegrationError(
          "non-finite state after r = " + std::to_string(last_r), last_r);
    on_sample(Sample{r, y.u, y.v});
    last_r = r;
    if (y.u <= 0.0) return Outcome::Crossing;
    if (y.v >= 0.0 && y.u < alpha && r > h) return Outcome::Rebound;
    if (std::abs(y.u) < decay_tol && std::abs(y.v) < slope_tol)
      return Outcome::Decay;
    if (r >= cfg.r_max) return Outcome::Undetermined;
    y = rk4_step(f, damping, r, h, y);
  }
}

Trajectory trace(const ShootingConfig& cfg, double alpha, double decay_tol) {
  Trajectory t;
  t.samples.reserve(std::min<std::size_t>(
      static_cast<std::size_t>(cfg.r_max / cfg.step) + 2, 1u << 16));
  t.outcome = run(cfg, alpha, decay_tol,
                  [&](const Sample& s) { t.samples.push_back(s); });
  return t;
}

Outcome outcome_only(const ShootingConfig& cfg, double alpha,
                     double decay_tol) {
  return run(cfg, alpha, decay_tol, [](const Sample&) {});
}

bool decisive(Outcome o) {
  return o == Outcome::Crossing || o == Outcome::Rebound;
}

// Lower grid end sits this far (relatively) below the first zero of F,
// where F(alpha) < 0 rules out a crossing.
constexpr double kBelowZeroF = 1e-3;
constexpr double kBelowTop = 1e-8;

GroundState make_ground_state(const ShootingConfig& cfg, double alpha,
                              Trajectory t) {
  const Sample& last = t.samples.back();
  const double residual = energy(cfg, last.u, last.u_r);
  return {alpha, std::move(t), residual};
}

}  // namespace

void validate(const ShootingConfig& cfg) {
  if (cfg.n < 1) throw DomainError("shooting requires n >= 1");
  if (!(cfg.r_max > 0.0) || !std::isfinite(cfg.r_max))
    throw DomainError("shooting requires r_max > 0");
  if (!(cfg.step > 0.0) || !std::isfinite(cfg.step))
    throw DomainError("shooting requires step > 0");
  if (!(cfg.decay_tol > 0.0 && cfg.decay_tol < 1e-2))
    throw DomainError("shooting requires decay_tol in (0, 1e-2)");
  if (!(cfg.alpha_tol > 0.0 && cfg.alpha_tol < 1e-2))
    throw DomainError("shooting requires alpha_tol in (0, 1e-2)");
}

ShootingConfig make_config(const DoublePower& g, int n,
                           const ShootingOptions& opts) {
  ShootingConfig cfg{
      .n = n,
      .f = as_triple(g),
      .r_max = opts.r_max > 0.0 ? opts.r_max : 200.0 / std::sqrt(g.omega()),
      .step = opts.step,
      .decay_tol = opts.decay_tol,
      .alpha_tol = opts.alpha_tol,
  };
  validate(cfg);
  return cfg;
}

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Crossing: return "crossing";
    case Outcome::Rebound: return "rebound";
    case Outcome::Decay: return "decay";
    case Outcome::Undetermined: return "undetermined";
  }
  return "?";
}

std::string_view to_string(NotFoundReason r) noexcept {
  switch (r) {
    case NotFoundReason::NoPositiveAntiderivative: return "F ≤ 0 on u > 0";
    case NotFoundReason::NoCrossing: return "no crossing shot on the grid";
    case NotFoundReason::Unresolved: return "bisection did not resolve decay";
  }
  return "?";
}

Trajectory integrate(const ShootingConfig& cfg, double alpha) {
  validate(cfg);
  return trace(cfg, alpha, cfg.decay_tol);
}

Outcome shoot(const ShootingConfig& cfg, double alpha) {
  validate(cfg);
  return outcome_only(cfg, alpha, cfg.decay_tol);
}

double energy(const ShootingConfig& cfg, double u, double u_r) {
  return 0.5 * u_r * u_r + eval(antiderivative(cfg.f), std::abs(u));
}

std::optional<HeightBracket> height_bracket(const TriplePower& f) {
  const TriplePower big_f = antiderivative(f);
  if (classify(big_f) != TrichotomyCase::PositivePart) return std::nullopt;
  const auto f_roots = oracle::find_roots(f);
  const auto big_f_roots = oracle::find_roots(big_f);
  if (f_roots.empty() || big_f_roots.empty()) return std::nullopt;
  return HeightBracket{big_f_roots.roots.front().value,
                       f_roots.roots.back().value};
}

GroundStateResult find_ground_state(const ShootingConfig& cfg) {
  validate(cfg);
  const auto bracket = height_bracket(cfg.f);
  if (!bracket) return NotFound{NotFoundReason::NoPositiveAntiderivative};
  const double z_f = bracket->z_f;
  const double z_top = bracket->z_top;

  // Linear fill of (z_F, z_top) plus points piling up geometrically below
  // z_top, where near-threshold ground states live.
  std::vector<double> grid{z_f * (1.0 - kBelowZeroF)};
  constexpr int kLinear = 24;
  for (int k = 1; k <= kLinear; ++k)
    grid.push_back(z_f + (z_top - z_f) * k / (kLinear + 1.0));
  for (int e = 2; e <= 8; ++e) {
    const double alpha = z_top * (1.0 - std::pow(10.0, -e));
    if (alpha > z_f) grid.push_back(alpha);
  }
  std::sort(grid.begin(), grid.end());

  const auto outcomes = parallel_map<Outcome>(grid.size(), [&](std::size_t i) {
    return outcome_only(cfg, grid[i], cfg.decay_tol);
  });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (outcomes[i] == Outcome::Decay)
      return make_ground_state(cfg, grid[i], trace(cfg, grid[i], cfg.decay_tol));
  }

  std::optional<std::size_t> lo_i;
  std::optional<std::size_t> hi_i;
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < grid.size() && !hi_i; ++i) {
    if (!decisive(outcomes[i])) continue;
    if (prev && outcomes[*prev] != outcomes[i]) {
      lo_i = prev;
      hi_i = i;
    }
    prev = i;
  }
  if (!hi_i) return NotFound{NotFoundReason::NoCrossing};

  double lo = grid[*lo_i];
  double hi = grid[*hi_i];
  const Outcome lo_outcome = outcomes[*lo_i];

  // Outcomes are read with decay detection off while the bracket is wide,
  // so every shot commits to one side.
  while (hi - lo > cfg.alpha_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const Outcome o = outcome_only(cfg, mid, 0.0);
    if (!decisive(o)) break;
    (o == lo_outcome ? lo : hi) = mid;
  }
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    Trajectory t = trace(cfg, mid, cfg.decay_tol);
    if (t.outcome == Outcome::Decay)
      return make_ground_state(cfg, mid, std::move(t));
    if (!decisive(t.outcome) || mid <= lo || mid >= hi)
      return NotFound{NotFoundReason::Unresolved};
    (t.outcome == lo_outcome ? lo : hi) = mid;
  }
}

std::vector<SweepRow> sweep_omega(double p, double q, int n,
                                  std::span<const double> omegas,
                                  const ShootingOptions& opts) {
  const double w_pq = omega_threshold(p, q);
  const double e_pq = eta_threshold(p, q);
  for (const double omega : omegas) {
    if (std::abs(omega - w_pq) < 0.02 * w_pq)
      throw DomainError("sweep requires every omega outside 2% of omega_{p,q}");
  }
  std::vector<SweepRow> rows;
  rows.reserve(omegas.size());
  for (const double omega : omegas) {
    const DoublePower g(omega, p, q);
    SweepRow row{omega, w_pq, e_pq, existence_predicted(g), false, {}, {}};
    try {
      const auto result = find_ground_state(make_config(g, n, opts));
      if (const auto* gs = std::get_if<GroundState>(&result)) {
        row.found = true;
        row.alpha_star = gs->alpha_star;
      }
    } catch (const IntegrationError& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

UniquenessWitness uniqueness_scan(const ShootingConfig& cfg, int grid_size) {
  validate(cfg);
  UniquenessWitness out;
  if (grid_size <= 0) return out;
  const auto bracket = height_bracket(cfg.f);
  if (!bracket) return out;
  out.vacuous = false;

  const double lo = bracket->z_f * (1.0 - kBelowZeroF);
  const double hi = bracket->z_top * (1.0 - kBelowTop);
  const auto outcomes = parallel_map<Outcome>(
      static_cast<std::size_t>(grid_size), [&](std::size_t i) {
        const double t = grid_size == 1 ? 0.0 : double(i) / (grid_size - 1);
        return outcome_only(cfg, lo + (hi - lo) * t, cfg.decay_tol);
      });
  std::optional<Outcome> prev;
  for (const Outcome o : outcomes) {
    if (!decisive(o)) continue;
    if (prev && *prev != o) ++out.transitions;
    prev = o;
  }
  return out;
}

}  // namespace tripow::shooting
