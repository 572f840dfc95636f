#include <cmath>
#include <variant>
#include <vector>

#include "brute_force.hpp"
#include "doctest.h"
#include "tripow/errors.hpp"
#include "tripow/oracle.hpp"
#include "tripow/random.hpp"
#include "tripow/shooting.hpp"
#include "tripow/thresholds.hpp"

using namespace tripow;
using namespace tripow::shooting;
using tripow::testing::bisect_root;
using tripow::testing::rel_err;

namespace {

// First positive zero of F(u) = -(w/2) u^2 + u^{p+1}/(p+1) - u^{q+1}/(q+1),
// bisected directly on the polynomial.
double zero_of_big_f(double omega, double p, double q, double lo, double hi) {
  return bisect_root([&](double u) {
    return -0.5 * omega * u * u + std::pow(u, p + 1) / (p + 1) -
           std::pow(u, q + 1) / (q + 1);
  }, lo, hi);
}

// Frozen from a step 1e-4, alpha_tol 1e-10 run of find_ground_state.
constexpr double kAlphaStarN3 = 0.91885212824566798;

void check_trajectory_shape(const Trajectory& t, double alpha) {
  REQUIRE(t.samples.size() >= 2);
  CHECK(t.samples.front().r == 0.0);
  CHECK(t.samples.front().u == alpha);
  CHECK(t.samples.front().u_r == 0.0);
  for (std::size_t i = 1; i < t.samples.size(); ++i)
    REQUIRE(t.samples[i].r > t.samples[i - 1].r);
  const Sample& last = t.samples.back();
  switch (t.outcome) {
    case Outcome::Crossing: CHECK(last.u <= 0.0); break;
    case Outcome::Rebound:
      CHECK(last.u_r >= 0.0);
      CHECK(last.u > 0.0);
      CHECK(last.u < alpha);
      break;
    default: break;
  }
}

}  // namespace

TEST_CASE("configuration limits") {
  const DoublePower g(0.1, 3, 5);
  CHECK_NOTHROW(make_config(g, 3));
  CHECK(make_config(g, 3).r_max == doctest::Approx(200.0 / std::sqrt(0.1)));
  CHECK_THROWS_AS(make_config(g, 0), DomainError);
  CHECK_THROWS_AS(make_config(g, 3, {.step = 0.0}), DomainError);
  CHECK_THROWS_AS(make_config(g, 3, {.decay_tol = 1e-2}), DomainError);
  CHECK_THROWS_AS(make_config(g, 3, {.alpha_tol = 0.0}), DomainError);
  CHECK_THROWS_AS(integrate(make_config(g, 3), 0.0), DomainError);
}

TEST_CASE("energy") {
  const ShootingConfig cfg = make_config(DoublePower(0.1, 3, 5), 3);
  const double alpha = 0.7;
  const double big_f = -0.05 * alpha * alpha + std::pow(alpha, 4) / 4 - std::pow(alpha, 6) / 6;
  CHECK(energy(cfg, alpha, 0.0) == doctest::Approx(big_f).epsilon(1e-14));
  CHECK(energy(cfg, 0.0, 0.0) == 0.0);
  CHECK(energy(cfg, -0.2, 0.1) == doctest::Approx(energy(cfg, 0.2, 0.1)));
}

TEST_CASE("integrate: conservative case started at the zero of F decays") {
  const double z_f = zero_of_big_f(0.1, 3, 5, 0.3, 0.7);
  const ShootingConfig cfg = make_config(DoublePower(0.1, 3, 5), 1);
  const Trajectory t = integrate(cfg, z_f);
  check_trajectory_shape(t, z_f);
  CHECK(t.outcome == Outcome::Decay);
  CHECK(integrate(cfg, z_f * (1 + 1e-6)).outcome == Outcome::Crossing);
  CHECK(integrate(cfg, z_f * (1 - 1e-6)).outcome == Outcome::Rebound);
}

TEST_CASE("integrate: outcomes change across the n = 3 ground state") {
  const ShootingConfig cfg = make_config(DoublePower(0.1, 3, 5), 3);
  const Trajectory above = integrate(cfg, kAlphaStarN3 * (1 + 1e-6));
  const Trajectory below = integrate(cfg, kAlphaStarN3 * (1 - 1e-6));
  check_trajectory_shape(above, kAlphaStarN3 * (1 + 1e-6));
  check_trajectory_shape(below, kAlphaStarN3 * (1 - 1e-6));
  CHECK(above.outcome == Outcome::Crossing);
  CHECK(below.outcome == Outcome::Rebound);

  const auto bracket = height_bracket(cfg.f);
  REQUIRE(bracket);
  CHECK(shoot(cfg, 0.99 * bracket->z_top) == Outcome::Crossing);
  // Dissipation keeps shots just above the zero of F from reaching u = 0.
  CHECK(shoot(cfg, bracket->z_f * (1 + 1e-3)) == Outcome::Rebound);
}

TEST_CASE("no crossing where F(alpha) < 0") {
  SplitMix64 rng(11);
  for (int n : {1, 2, 3, 5}) {
    for (double omega : {0.05, 0.1, 0.15}) {
      const ShootingConfig cfg = make_config(DoublePower(omega, 3, 5), n, {.step = 2e-3});
      const auto bracket = height_bracket(cfg.f);
      REQUIRE(bracket);
      for (int i = 0; i < 6; ++i) {
        const double alpha = rng.uniform(0.02, 0.999) * bracket->z_f;
        INFO("n=" << n << " omega=" << omega << " alpha=" << alpha);
        CHECK(shoot(cfg, alpha) != Outcome::Crossing);
      }
    }
  }
  // Below the first zero of f the force is negative at the start.
  const ShootingConfig cfg = make_config(DoublePower(0.1, 3, 5), 3);
  const double z1 = oracle::find_roots(cfg.f).roots.front().value;
  const Outcome o = shoot(cfg, 0.5 * z1);
  CHECK((o == Outcome::Rebound || o == Outcome::Undetermined));
}

TEST_CASE("energy is nonincreasing for n >= 2 and conserved for n = 1") {
  for (int n : {2, 3, 4}) {
    for (double omega : {0.05, 0.1}) {
      const ShootingConfig cfg = make_config(DoublePower(omega, 3, 5), n);
      const auto bracket = height_bracket(cfg.f);
      for (double t : {0.0, 0.3, 0.7, 0.95, 0.999999}) {
        const double alpha = bracket->z_f + (bracket->z_top - bracket->z_f) * t;
        const Trajectory tr = integrate(cfg, alpha);
        const double e0 = energy(cfg, alpha, 0.0);
        const double slack = 1e-8 * (1.0 + std::abs(e0));
        double prev = e0;
        bool ok = true;
        for (const Sample& s : tr.samples) {
          const double e = energy(cfg, s.u, s.u_r);
          ok = ok && e <= prev + slack;
          prev = e;
        }
        INFO("n=" << n << " omega=" << omega << " alpha=" << alpha);
        CHECK(ok);
      }
    }
  }
  const ShootingConfig cfg = make_config(DoublePower(0.1, 3, 5), 1, {.r_max = 50.0});
  for (double alpha : {0.3, 0.48, 0.6, 0.9}) {
    const Trajectory tr = integrate(cfg, alpha);
    const double e0 = energy(cfg, alpha, 0.0);
    double drift = 0.0;
    for (const Sample& s : tr.samples)
      drift = std::max(drift, std::abs(energy(cfg, s.u, s.u_r) - e0));
    CHECK(drift <= 1e-6 * (1.0 + std::abs(e0)));
  }
}

TEST_CASE("integration failure is reported") {
  const ShootingConfig cfg = make_config(DoublePower(0.1, 3, 5), 3);
  CHECK_THROWS_AS(integrate(cfg, 1e60), IntegrationError);
}

TEST_CASE("find_ground_state, n = 3 below the existence threshold") {
  const ShootingConfig cfg = make_config(DoublePower(0.1, 3, 5), 3);
  const auto result = find_ground_state(cfg);
  REQUIRE(std::holds_alternative<GroundState>(result));
  const GroundState& gs = std::get<GroundState>(result);
  CHECK(gs.trajectory.outcome == Outcome::Decay);
  CHECK(eval(cfg.f, gs.alpha_star) > 0.0);
  CHECK(eval(antiderivative(cfg.f), gs.alpha_star) > 0.0);
  CHECK(rel_err(gs.alpha_star, kAlphaStarN3) < 1e-8);
  CHECK(std::abs(gs.energy_residual) < 1e-10);
  check_trajectory_shape(gs.trajectory, gs.alpha_star);
}

TEST_CASE("find_ground_state, F negative everywhere") {
  const auto result = find_ground_state(make_config(DoublePower(0.21, 3, 5), 3));
  REQUIRE(std::holds_alternative<NotFound>(result));
  CHECK(std::get<NotFound>(result).reason == NotFoundReason::NoPositiveAntiderivative);
  CHECK(classify(antiderivative(DoublePower(0.21, 3, 5))) == TrichotomyCase::Negative);
}

TEST_CASE("find_ground_state, conservative case hits the zero of F") {
  const double z_f = zero_of_big_f(0.1, 3, 5, 0.3, 0.7);
  const ShootingConfig cfg = make_config(DoublePower(0.1, 3, 5), 1);
  const auto result = find_ground_state(cfg);
  REQUIRE(std::holds_alternative<GroundState>(result));
  const double alpha = std::get<GroundState>(result).alpha_star;
  CHECK(std::abs(alpha - z_f) <= 10 * cfg.alpha_tol);
}

TEST_CASE("alpha_star converges at fourth order in the step") {
  const double z_f = zero_of_big_f(0.1, 3, 5, 0.3, 0.7);
  const DoublePower g(0.1, 3, 5);
  const auto error_at = [&](double step) {
    const auto r = find_ground_state(make_config(g, 1, {.step = step, .alpha_tol = 1e-15}));
    REQUIRE(std::holds_alternative<GroundState>(r));
    return std::abs(std::get<GroundState>(r).alpha_star - z_f);
  };
  const double coarse = error_at(0.04);
  const double fine = error_at(0.02);
  MESSAGE("alpha_star error: step 0.04 -> " << coarse << ", step 0.02 -> " << fine);
  CHECK(coarse >= 8.0 * fine);
}

TEST_CASE("sweep_omega") {
  const std::vector<double> omegas{0.05, 0.10, 0.15, 0.21, 0.30};
  const auto rows = sweep_omega(3, 5, 3, omegas);
  REQUIRE(rows.size() == omegas.size());
  const bool expected[] = {true, true, true, false, false};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    INFO("omega=" << rows[i].omega);
    CHECK(rows[i].omega == omegas[i]);
    CHECK(rows[i].found == expected[i]);
    CHECK(rows[i].predicted == expected[i]);
    CHECK(rows[i].agrees());
    CHECK(rows[i].alpha_star.has_value() == expected[i]);
    CHECK(rows[i].omega_threshold == doctest::Approx(0.1875));
    CHECK(rows[i].eta_threshold == doctest::Approx(0.25));
  }

  const std::vector<double> small{0.1, 0.3};
  const auto rows23 = sweep_omega(2, 3, 3, small);
  REQUIRE(rows23.size() == 2);
  CHECK(rows23[0].found);
  CHECK_FALSE(rows23[1].found);

  CHECK(sweep_omega(3, 5, 3, std::vector<double>{}).empty());
  CHECK_THROWS_AS(sweep_omega(3, 5, 3, std::vector<double>{0.19}), DomainError);
}

TEST_CASE("uniqueness_scan") {
  const auto n3 = uniqueness_scan(make_config(DoublePower(0.1, 3, 5), 3), 200);
  CHECK_FALSE(n3.vacuous);
  CHECK(n3.transitions == 1);
  const auto n1 = uniqueness_scan(make_config(DoublePower(0.1, 3, 5), 1), 200);
  CHECK(n1.transitions == 1);

  const auto empty = uniqueness_scan(make_config(DoublePower(0.1, 3, 5), 3), 0);
  CHECK(empty.vacuous);
  CHECK(empty.transitions == 0);
  CHECK(uniqueness_scan(make_config(DoublePower(0.21, 3, 5), 3), 50).vacuous);
}
