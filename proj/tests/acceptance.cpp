// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "brute_force.hpp"
#include "tripow/oracle.hpp"
#include "tripow/power_function.hpp"
#include "tripow/random.hpp"
#include "tripow/shooting.hpp"
#include "tripow/thresholds.hpp"

using namespace tripow;
using tripow::testing::bisect_root;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double boundary_distance(const TriplePower& f) {
  return -std::expm1(-std::abs(std::log(f.a()) - log_threshold(f)));
}

struct PQ {
  double p, q;
};

std::vector<PQ> exponent_grid() {
  std::vector<PQ> out;
  for (double p : {1.1, 1.5, 2.0, 3.0, 4.0})
    for (int k = 1; p + 0.2 * k <= 8.0 + 1e-9; ++k) out.push_back({p, p + 0.2 * k});
  return out;
}

Verdict duality() {
  const auto t0 = Clock::now();
  SplitMix64 rng(20240601);
  int compared = 0, exceptions = 0;
  while (compared < 1000) {
    const TriplePower f = random_triple(rng);
    if (boundary_distance(f) <= 1e-6) continue;
    ++compared;
    const TrichotomyCase kind = classify(f);
    if (kind == TrichotomyCase::OneZero || classify(tilde(f).function) != dual(kind))
      ++exceptions;
  }
  int built = 0, boundary_misses = 0;
  while (built < 100) {
    const TriplePower g = random_triple(rng);
    const double t = threshold(g);
    if (!(std::isnormal(t) && std::isfinite(t))) continue;
    const TriplePower f = g.with_a(t);
    ++built;
    if (classify(f, 1e-9) != TrichotomyCase::OneZero ||
        classify(tilde(f).function, 1e-9) != TrichotomyCase::OneZero)
      ++boundary_misses;
  }
  const double elapsed = seconds_since(t0);
  return {exceptions == 0 && boundary_misses == 0 && elapsed < 5.0,
          fmt::format("{} random instances, {} exceptions; {} boundary instances, {} "
                      "not case (b); {:.3f} s",
                      compared, exceptions, built, boundary_misses, elapsed)};
}

// The transform cancels the a^2, b^2 and c^2 parts exactly, so the error is
// measured against the size of the terms the difference quotient combines.
Verdict tilde_identity() {
  const auto t0 = Clock::now();
  SplitMix64 rng(777001);
  long points = 0, bad = 0, plain_ok = 0;
  double worst = 0.0;
  int instances = 0;
  while (instances < 100) {
    const TriplePower f = random_triple(rng);
    const TriplePower t = tilde(f).function;
    const double log_star = log_turning_point(f);
    std::vector<std::array<double, 3>> rows;
    for (int k = 0; k < 100; ++k) {
      const double u = std::exp(log_star + std::log(10.0) * (-1.0 + 2.0 * k / 99.0));
      const auto fd = oracle::tilde_fd_detailed(f, u);
      const double exact = eval(t, u);
      const double scale = std::max(fd.magnitude, term_scale(t, u));
      if (!(std::isfinite(fd.value) && std::isfinite(exact) && std::isfinite(scale) &&
            scale > 0.0))
        break;
      rows.push_back({fd.value, exact, scale});
    }
    if (rows.size() < 100) continue;  // instance leaves the double range
    ++instances;
    for (const auto& [fd, exact, scale] : rows) {
      ++points;
      const double err = std::abs(fd - exact) / scale;
      worst = std::max(worst, err);
      if (!(err < 1e-6)) ++bad;
      if (std::abs(fd - exact) < 1e-6 * std::abs(exact)) ++plain_ok;
    }
  }
  const double elapsed = seconds_since(t0);
  return {bad == 0 && elapsed < 5.0,
          fmt::format("{} points on {} instances, worst scaled error {:.2e}, {} over "
                      "1e-6; {} points also within 1e-6 of |tilde f|; {:.3f} s",
                      points, instances, worst, bad, plain_ok, elapsed)};
}

Verdict threshold_closures() {
  int bad = 0, checked = 0;
  for (const auto [p, q] : exponent_grid()) {
    const double w = omega_threshold(p, q);
    const double e = eta_threshold(p, q);
    const TriplePower f_form(0.37, 1.0 / (p + 1), 1.0 / (q + 1), 2.0, p + 1, q + 1);
    const TriplePower g_form(1.9, 1.0, 1.0, 1.0, p, q);
    ++checked;
    if (!(std::abs(w - 2.0 * threshold(f_form)) <= 1e-12 * w)) ++bad;
    if (!(std::abs(e - threshold(g_form)) <= 1e-12 * e)) ++bad;
  }
  const double w35 = omega_threshold(3, 5), e35 = eta_threshold(3, 5);
  const bool spots = std::abs(w35 - 0.1875) <= 1e-15 * 0.1875 &&
                     std::abs(e35 - 0.25) <= 1e-15 * 0.25;
  return {bad == 0 && spots,
          fmt::format("{} grid points, {} mismatches; omega_3,5 = {:.17g}, eta_3,5 = "
                      "{:.17g}",
                      checked, bad, w35, e35)};
}

Verdict ordering() {
  int bad = 0, checked = 0;
  for (const auto [p, q] : exponent_grid()) {
    ++checked;
    if (!(omega_threshold(p, q) < eta_threshold(p, q))) ++bad;
  }
  return {bad == 0, fmt::format("{} grid points, {} not strictly ordered", checked, bad)};
}

Verdict existence() {
  const auto t0 = Clock::now();
  struct Sweep {
    double p, q;
    std::vector<double> omegas;
    std::vector<bool> expected;
  };
  const std::vector<Sweep> sweeps = {
      {3, 5, {0.05, 0.10, 0.15, 0.21, 0.30}, {true, true, true, false, false}},
      {2, 3, {0.1, 0.3}, {true, false}},
  };
  bool ok = true;
  std::string found;
  for (const Sweep& s : sweeps) {
    const auto rows = shooting::sweep_omega(s.p, s.q, 3, s.omegas);
    found += fmt::format(" ({},{}):", s.p, s.q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      found += rows[i].found ? "T" : "F";
      ok = ok && !rows[i].error && rows[i].found == s.expected[i] && rows[i].agrees();
    }
  }
  const double elapsed = seconds_since(t0);
  return {ok && elapsed < 60.0, fmt::format("found{}; {:.2f} s", found, elapsed)};
}

double zero_of_big_f(double omega, double p, double q) {
  return bisect_root([&](double u) {
    return -0.5 * omega * u * u + std::pow(u, p + 1) / (p + 1) -
           std::pow(u, q + 1) / (q + 1);
  }, 0.3, 0.7);
}

std::optional<double> alpha_star(const DoublePower& g, int n,
                                 const shooting::ShootingOptions& opts) {
  const auto r = shooting::find_ground_state(shooting::make_config(g, n, opts));
  if (const auto* gs = std::get_if<shooting::GroundState>(&r)) return gs->alpha_star;
  return std::nullopt;
}

Verdict conservative() {
  const DoublePower g(0.1, 3, 5);
  const double z_f = zero_of_big_f(0.1, 3, 5);
  const auto alpha = alpha_star(g, 1, {});
  const auto coarse = alpha_star(g, 1, {.step = 0.04, .alpha_tol = 1e-15});
  const auto fine = alpha_star(g, 1, {.step = 0.02, .alpha_tol = 1e-15});
  if (!alpha || !coarse || !fine) return {false, "no ground state found"};
  const double rel = std::abs(*alpha - z_f) / z_f;
  const double e_coarse = std::abs(*coarse - z_f), e_fine = std::abs(*fine - z_f);
  const double ratio = e_coarse / e_fine;
  return {rel <= 1e-6 && ratio >= 8.0,
          fmt::format("alpha_star {:.15g} vs zero of F {:.15g} (rel {:.2e}); error at "
                      "step 0.04 {:.2e}, at 0.02 {:.2e}, ratio {:.1f}",
                      *alpha, z_f, rel, e_coarse, e_fine, ratio)};
}

Verdict energy() {
  int trajectories = 0, violations = 0;
  for (int n : {2, 3, 4, 5}) {
    for (double omega : {0.05, 0.1, 0.15}) {
      const auto cfg = shooting::make_config(DoublePower(omega, 3, 5), n);
      const auto bracket = shooting::height_bracket(cfg.f);
      for (double t : {0.0, 0.25, 0.5, 0.75, 0.95, 0.999999}) {
        const double alpha = bracket->z_f + (bracket->z_top - bracket->z_f) * t;
        const auto tr = shooting::integrate(cfg, alpha);
        const double e0 = shooting::energy(cfg, alpha, 0.0);
        const double slack = 1e-8 * (1.0 + std::abs(e0));
        double prev = e0;
        ++trajectories;
        for (const auto& s : tr.samples) {
          const double e = shooting::energy(cfg, s.u, s.u_r);
          if (e > prev + slack) {
            ++violations;
            break;
          }
          prev = e;
        }
      }
    }
  }
  const auto cfg = shooting::make_config(DoublePower(0.1, 3, 5), 1, {.r_max = 50.0});
  double worst_drift = 0.0;
  for (double alpha : {0.3, 0.48, 0.6, 0.75, 0.9}) {
    const auto tr = shooting::integrate(cfg, alpha);
    const double e0 = shooting::energy(cfg, alpha, 0.0);
    for (const auto& s : tr.samples)
      worst_drift = std::max(worst_drift, std::abs(shooting::energy(cfg, s.u, s.u_r) - e0) /
                                              (1.0 + std::abs(e0)));
  }
  return {violations == 0 && worst_drift < 1e-6,
          fmt::format("{} trajectories with n >= 2, {} increases; n = 1 drift {:.2e}",
                      trajectories, violations, worst_drift)};
}

Verdict uniqueness() {
  const auto n3 = shooting::uniqueness_scan(
      shooting::make_config(DoublePower(0.1, 3, 5), 3), 200);
  const auto n1 = shooting::uniqueness_scan(
      shooting::make_config(DoublePower(0.1, 3, 5), 1), 200);
  return {!n3.vacuous && !n1.vacuous && n3.transitions == 1 && n1.transitions == 1,
          fmt::format("transitions: n = 3 -> {}, n = 1 -> {}", n3.transitions,
                      n1.transitions)};
}

struct Captured {
  int code;
  std::string out;
};

Captured capture(const std::string& args) {
  const std::string cmd = std::string(TRIPOW_EXE) + " " + args + " 2>/dev/null";
  Captured c{-1, {}};
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;)
    c.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

Verdict determinism() {
  const std::string args = "--json verify --seed 42 --trials 1000";
  const Captured first = capture(args);
  const Captured second = capture(args);
  const bool same = first.out == second.out && !first.out.empty();
  return {first.code == 0 && second.code == 0 && same,
          fmt::format("exit codes {} and {}, {} bytes, outputs {}", first.code,
                      second.code, first.out.size(), same ? "identical" : "differ")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*check)();
  };
  const Criterion criteria[] = {
      {"trichotomy duality", duality},
      {"tilde identity", tilde_identity},
      {"threshold closures", threshold_closures},
      {"threshold ordering", ordering},
      {"existence sweeps", existence},
      {"conservative exactness", conservative},
      {"energy properties", energy},
      {"uniqueness witness", uniqueness},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    fmt::print("{} {}. {}: {}\n", v.pass ? "PASS" : "FAIL", index, c.name, v.detail);
    std::fflush(stdout);
  }
  fmt::print("{}/{} criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
