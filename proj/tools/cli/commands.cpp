#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include <fmt/format.h>

#include "cli/verify_suites.hpp"
#include "tripow/errors.hpp"
#include "tripow/oracle.hpp"
#include "tripow/power_function.hpp"
#include "tripow/shooting.hpp"
#include "tripow/thresholds.hpp"

namespace tripow::cli {

namespace {

TriplePower make_triple(const TripleArgs& x) {
  return {x.a, x.b, x.c, x.p, x.q, x.r};
}

std::vector<double> root_values(const oracle::RootSet& rs) {
  std::vector<double> out;
  for (const auto& z : rs.roots) out.push_back(z.value);
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw DomainError("cannot open " + path + " for writing");
  return file;
}

shooting::ShootingOptions options_of(const ShootArgs& args) {
  return {.step = args.step,
          .r_max = args.r_max,
          .decay_tol = args.decay_tol,
          .alpha_tol = args.alpha_tol};
}

}  // namespace

int cmd_classify(const TripleArgs& args, double rel_tol, Emitter& out) {
  const TriplePower f = make_triple(args);
  const TrichotomyCase kind = classify(f, rel_tol);
  const oracle::RootSet roots = oracle::find_roots(f);
  OutputRecord rec{RecordKind::Classification, {}};
  rec.add("a", f.a()).add("b", f.b()).add("c", f.c());
  rec.add("p", f.p()).add("q", f.q()).add("r", f.r());
  rec.add("case", std::string(case_label(kind)));
  rec.add("description", std::string(to_string(kind)));
  rec.add("threshold", threshold(f));
  rec.add("log_threshold", log_threshold(f));
  rec.add("turning_point", turning_point(f));
  rec.add("rel_tol", rel_tol);
  rec.add("roots", root_values(roots));
  rec.add("double_root", roots.size() == 1);
  out.emit(rec);
  return kExitOk;
}

int cmd_tilde(const TripleArgs& args, double rel_tol, Emitter& out) {
  const TriplePower f = make_triple(args);
  const TriplePower g = tilde(f).function;
  const TrichotomyCase kind = classify(f, rel_tol);
  const TrichotomyCase dual_kind = classify(g, rel_tol);
  OutputRecord rec{RecordKind::Tilde, {}};
  rec.add("a", g.a()).add("b", g.b()).add("c", g.c());
  rec.add("p", g.p()).add("q", g.q()).add("r", g.r());
  rec.add("input_case", std::string(case_label(kind)));
  rec.add("tilde_case", std::string(case_label(dual_kind)));
  rec.add("tilde_description", std::string(to_string(dual_kind)));
  out.emit(rec);
  return kExitOk;
}

int cmd_thresholds(double p, double q, Emitter& out) {
  const double w = omega_threshold(p, q);
  const double e = eta_threshold(p, q);
  OutputRecord rec{RecordKind::Thresholds, {}};
  rec.add("p", p).add("q", q);
  rec.add("omega_threshold", w).add("eta_threshold", e).add("ratio", w / e);
  out.emit(rec);
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, Emitter& out, std::ostream& err) {
  if (args.trials < 1) throw DomainError("verify requires trials ≥ 1");
  const auto suites = run_verify_suites(
      {.seed = args.seed, .trials = args.trials, .negate_duality = args.negate_duality});

  std::vector<OutputRecord> records;
  std::int64_t passed = 0, failed = 0;
  const SuiteResult* first_failure = nullptr;
  for (const SuiteResult& s : suites) {
    OutputRecord rec{RecordKind::VerifySummary, {}};
    rec.add("suite", s.name).add("seed", static_cast<std::int64_t>(args.seed));
    rec.add("cases", s.cases).add("passed", s.passed).add("failed", s.failed);
    rec.add("status", std::string(s.ok() ? "pass" : "fail"));
    rec.add("counterexample", s.counterexample ? Value(*s.counterexample) : Value{});
    records.push_back(std::move(rec));
    passed += s.passed;
    failed += s.failed;
    if (!s.ok() && !first_failure) first_failure = &s;
  }
  OutputRecord total{RecordKind::VerifySummary, {}};
  total.add("suite", std::string("all")).add("seed", static_cast<std::int64_t>(args.seed));
  total.add("trials", args.trials).add("passed", passed).add("failed", failed);
  total.add("status", std::string(failed == 0 ? "pass" : "fail"));
  records.push_back(std::move(total));

  for (const auto& rec : records) out.emit(rec);
  if (args.report_path) {
    std::ofstream report = open_output(*args.report_path);
    for (const auto& rec : records) report << to_json_line(rec) << '\n';
  }
  if (first_failure) {
    err << "verify: suite " << first_failure->name
        << " failed; first counterexample: " << *first_failure->counterexample
        << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_shoot(const ShootArgs& args, const std::optional<std::string>& csv,
              Emitter& out) {
  const DoublePower g(args.omega, args.p, args.q);
  const auto cfg = shooting::make_config(g, args.n, options_of(args));
  const auto result = shooting::find_ground_state(cfg);

  OutputRecord rec{RecordKind::Trajectory, {}};
  rec.add("n", static_cast<std::int64_t>(args.n));
  rec.add("omega", g.omega()).add("p", g.p()).add("q", g.q());
  rec.add("step", cfg.step).add("r_max", cfg.r_max);
  rec.add("predicted_existence", existence_predicted(g));

  const shooting::Trajectory* trajectory = nullptr;
  if (const auto* gs = std::get_if<shooting::GroundState>(&result)) {
    trajectory = &gs->trajectory;
    rec.add("found", true).add("alpha_star", gs->alpha_star);
    rec.add("outcome", std::string(shooting::to_string(gs->trajectory.outcome)));
    rec.add("r_end", gs->trajectory.samples.back().r);
    rec.add("samples", static_cast<std::int64_t>(gs->trajectory.samples.size()));
    rec.add("energy_residual", gs->energy_residual);
    rec.add("status", fmt::format("alpha_star = {:.17g}", gs->alpha_star));
  } else {
    const auto reason = std::get<shooting::NotFound>(result).reason;
    rec.add("found", false).add("alpha_star", Value{});
    rec.add("status", fmt::format("NOT FOUND ({})", shooting::to_string(reason)));
  }
  if (csv) {
    std::ofstream file = open_output(*csv);
    file << "r,u,u_r,energy\n";
    if (trajectory) {
      for (const auto& s : trajectory->samples)
        file << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", s.r, s.u, s.u_r,
                            shooting::energy(cfg, s.u, s.u_r));
    }
  }
  out.emit(rec);
  return kExitOk;
}

int cmd_sweep(const ShootArgs& args, const std::optional<std::string>& csv,
              Emitter& out, std::ostream& err) {
  if (args.n < 1) throw DomainError("shooting requires n >= 1");
  const auto rows =
      shooting::sweep_omega(args.p, args.q, args.n, args.omegas, options_of(args));
  bool failures = false;
  std::ostringstream table;
  table << "omega,omega_threshold,eta_threshold,predicted,found,alpha_star\n";
  for (const auto& row : rows) {
    OutputRecord rec{RecordKind::SweepRow, {}};
    rec.add("n", static_cast<std::int64_t>(args.n));
    rec.add("p", args.p).add("q", args.q);
    rec.add("omega", row.omega);
    rec.add("omega_threshold", row.omega_threshold);
    rec.add("eta_threshold", row.eta_threshold);
    rec.add("predicted", row.predicted).add("found", row.found);
    rec.add("alpha_star", row.alpha_star ? Value(*row.alpha_star) : Value{});
    rec.add("agrees", row.agrees());
    rec.add("error", row.error ? Value(*row.error) : Value{});
    out.emit(rec);

    table << fmt::format("{:.17g},{:.17g},{:.17g},{},{},{}\n", row.omega,
                         row.omega_threshold, row.eta_threshold, row.predicted,
                         row.found,
                         row.alpha_star ? format_double(*row.alpha_star) : "");
    if (row.error) {
      failures = true;
      err << "sweep: integration failed at omega = " << format_double(row.omega)
          << ": " << *row.error << '\n';
    }
  }
  if (csv) open_output(*csv) << table.str();
  return failures ? kExitFailure : kExitOk;
}

}  // namespace tripow::cli
