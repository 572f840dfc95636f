#include "cli/verify_suites.hpp"

#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "tripow/oracle.hpp"
#include "tripow/power_function.hpp"
#include "tripow/random.hpp"
#include "tripow/thresholds.hpp"

namespace tripow::cli {

namespace {

std::string describe(const TriplePower& f) {
  return fmt::format("a={:.17g} b={:.17g} c={:.17g} p={:.17g} q={:.17g} r={:.17g}",
                     f.a(), f.b(), f.c(), f.p(), f.q(), f.r());
}

double boundary_distance(const TriplePower& f) {
  return -std::expm1(-std::abs(std::log(f.a()) - log_threshold(f)));
}

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::function<std::string()>& describe_case) {
    ++result_.cases;
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (!result_.counterexample) result_.counterexample = describe_case();
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

SuiteResult threshold_oracle(SplitMix64 rng, std::int64_t trials) {
  Tally t("threshold-vs-grid");
  const oracle::ScanConfig grid{};
  for (std::int64_t i = 0; i < trials; ++i) {
    const TriplePower f = random_triple(rng, {.tilde_ready = false});
    const double gap = std::abs(log_threshold(f) - oracle::grid_log_max(f, grid));
    t.record(gap <= 1e-6, [&] { return describe(f); });
  }
  return t.take();
}

SuiteResult classification(SplitMix64 rng, std::int64_t trials) {
  Tally t("classification-agreement");
  for (std::int64_t i = 0; i < trials; ++i) {
    const TriplePower f = random_triple(rng, {.tilde_ready = false});
    if (boundary_distance(f) < 1e-9) continue;
    t.record(classify(f, 1e-12) == oracle::scan_classify(f),
             [&] { return describe(f); });
  }
  return t.take();
}

SuiteResult tilde_identity(SplitMix64 rng, std::int64_t trials) {
  Tally t("tilde-identity");
  constexpr int kPoints = 10;
  for (std::int64_t i = 0; i < trials; ++i) {
    const TriplePower f = random_triple(rng);
    const TriplePower g = tilde(f).function;
    const double log_star = log_turning_point(f);
    bool ok = true;
    double bad_u = 0.0;
    for (int k = 0; k < kPoints && ok; ++k) {
      const double u =
          std::exp(log_star + std::log(10.0) * (-1.0 + 2.0 * k / (kPoints - 1)));
      const auto fd = oracle::tilde_fd_detailed(f, u);
      const double exact = eval(g, u);
      const double scale = std::max(fd.magnitude, term_scale(g, u));
      if (!std::isfinite(scale) || !std::isfinite(exact) || !std::isfinite(fd.value))
        continue;
      ok = std::abs(fd.value - exact) <= 1e-6 * scale;
      bad_u = u;
    }
    t.record(ok, [&] { return fmt::format("{} u={:.17g}", describe(f), bad_u); });
  }
  return t.take();
}

SuiteResult duality(SplitMix64 rng, std::int64_t trials, bool negate) {
  Tally t("tilde-duality");
  for (std::int64_t i = 0; i < trials; ++i) {
    const TriplePower f = random_triple(rng);
    if (boundary_distance(f) <= 1e-6) continue;
    const TrichotomyCase kind = classify(f, 1e-12);
    const TrichotomyCase expected = negate ? kind : dual(kind);
    t.record(classify(tilde(f).function, 1e-12) == expected,
             [&] { return describe(f); });
  }
  const std::int64_t boundary = std::max<std::int64_t>(1, trials / 10);
  for (std::int64_t built = 0; built < boundary;) {
    const TriplePower g = random_triple(rng);
    const double thr = threshold(g);
    if (!(std::isnormal(thr) && std::isfinite(thr))) continue;
    const TriplePower f = g.with_a(thr);
    const TriplePower h = tilde(f).function;
    if (!std::isfinite(threshold(h))) continue;
    ++built;
    t.record(classify(f, 1e-9) == TrichotomyCase::OneZero &&
                 classify(h, 1e-9) == TrichotomyCase::OneZero,
             [&] { return describe(f); });
  }
  return t.take();
}

SuiteResult threshold_closures(SplitMix64 rng, std::int64_t trials) {
  Tally t("threshold-closures");
  const auto check = [&](double p, double q) {
    const double w = omega_threshold(p, q);
    const double e = eta_threshold(p, q);
    const TriplePower big_f(1.0, 1.0 / (p + 1), 1.0 / (q + 1), 2.0, p + 1, q + 1);
    const TriplePower f(1.0, 1.0, 1.0, 1.0, p, q);
    const bool ok = std::abs(w - 2.0 * threshold(big_f)) <= 1e-12 * w &&
                    std::abs(e - threshold(f)) <= 1e-12 * e && w < e;
    t.record(ok, [&] { return fmt::format("p={:.17g} q={:.17g}", p, q); });
  };
  for (double p : {1.1, 1.5, 2.0, 3.0, 4.0})
    for (int k = 1; p + 0.2 * k <= 8.0 + 1e-9; ++k) check(p, p + 0.2 * k);
  for (std::int64_t i = 0; i < trials; ++i) {
    const double p = rng.uniform(1.05, 6.0);
    check(p, rng.uniform(p + 0.05, 8.0));
  }
  return t.take();
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(const VerifyOptions& opts) {
  SplitMix64 seeds(opts.seed);
  std::vector<SuiteResult> out;
  out.push_back(threshold_oracle(SplitMix64(seeds()), opts.trials));
  out.push_back(classification(SplitMix64(seeds()), opts.trials));
  out.push_back(tilde_identity(SplitMix64(seeds()), opts.trials));
  out.push_back(duality(SplitMix64(seeds()), opts.trials, opts.negate_duality));
  out.push_back(threshold_closures(SplitMix64(seeds()), opts.trials));
  return out;
}

}  // namespace tripow::cli
