#include "cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cli/commands.hpp"
#include "tripow/errors.hpp"
#include "tripow/power_function.hpp"

namespace tripow::cli {

namespace {

const std::vector<std::string> kSubcommands = {"classify", "tilde", "thresholds",
                                               "verify",   "shoot", "sweep"};

std::string flag_for(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key.size() == 1 ? "-" + key : "--" + key;
}

bool mentions(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Splices `key = value` lines from --config into the argument list right
// after the subcommand, skipping keys the command line already sets.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return args;

  std::ifstream file(*path);
  if (!file) throw CLI::FileError::Missing(*path);
  const auto items = CLI::ConfigINI().from_config(file);

  std::vector<std::string> extra;
  for (const auto& item : items) {
    if (item.inputs.empty()) continue;
    const std::string flag = flag_for(item.name);
    if (!item.parents.empty() || mentions(args, flag)) continue;
    const std::string& value = item.inputs.front();
    if (value == "true") {
      extra.push_back(flag);
    } else if (value != "false") {
      std::string joined = value;
      for (std::size_t k = 1; k < item.inputs.size(); ++k) joined += "," + item.inputs[k];
      extra.push_back(flag);
      extra.push_back(joined);
    }
  }
  auto at = std::find_first_of(args.begin(), args.end(), kSubcommands.begin(),
                               kSubcommands.end());
  if (at != args.end()) ++at;
  args.insert(at, extra.begin(), extra.end());
  return args;
}

void add_triple(CLI::App& cmd, TripleArgs& x) {
  cmd.add_option("-a", x.a, "coefficient of -u^p")->required();
  cmd.add_option("-b", x.b, "coefficient of +u^q")->required();
  cmd.add_option("-c", x.c, "coefficient of -u^r")->required();
  cmd.add_option("-p", x.p, "lowest exponent")->required();
  cmd.add_option("-q", x.q, "middle exponent")->required();
  cmd.add_option("-r", x.r, "highest exponent")->required();
}

void add_shooting(CLI::App& cmd, ShootArgs& x) {
  cmd.add_option("-n", x.n, "space dimension")->capture_default_str();
  cmd.add_option("-p", x.p, "exponent of +u^p")->required();
  cmd.add_option("-q", x.q, "exponent of -u^q")->required();
  cmd.add_option("--step", x.step, "RK4 step")->capture_default_str();
  cmd.add_option("--r-max", x.r_max, "radius cutoff (default 200/sqrt(omega))");
  cmd.add_option("--decay-tol", x.decay_tol, "decay box size")->capture_default_str();
  cmd.add_option("--alpha-tol", x.alpha_tol, "bisection tolerance")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triple power nonlinearities: classification, transforms and shooting",
               "tripow"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::optional<std::string> csv;
  std::string config;
  double rel_tol = kDefaultRelTol;
  app.add_flag("--json", json, "one JSON object per line");
  app.add_option("--csv", csv, "write trajectory or sweep rows to this file");
  app.add_option("--config", config, "key = value defaults; flags override");
  app.add_option("--rel-tol", rel_tol, "relative tolerance of the boundary case")
      ->capture_default_str();

  TripleArgs triple;
  auto* classify_cmd = app.add_subcommand("classify", "classify f = -a u^p + b u^q - c u^r");
  add_triple(*classify_cmd, triple);
  auto* tilde_cmd = app.add_subcommand("tilde", "coefficients and case of the transform of f");
  add_triple(*tilde_cmd, triple);

  double tp = 0, tq = 0;
  auto* thresholds_cmd =
      app.add_subcommand("thresholds", "omega and eta thresholds of -omega u + u^p - u^q");
  thresholds_cmd->add_option("-p", tp)->required();
  thresholds_cmd->add_option("-q", tq)->required();

  VerifyArgs verify;
  std::string fault;
  auto* verify_cmd = app.add_subcommand("verify", "randomized cross-check suites");
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials)->capture_default_str();
  verify_cmd->add_option("--report", verify.report_path, "also write JSON lines here");
  verify_cmd->add_option("--inject-fault", fault)
      ->check(CLI::IsMember({"duality"}))
      ->group("");

  ShootArgs shoot;
  auto* shoot_cmd = app.add_subcommand("shoot", "ground state of -omega u + u^p - u^q");
  add_shooting(*shoot_cmd, shoot);
  shoot_cmd->add_option("--omega", shoot.omega)->required();

  ShootArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "shoot over a list of omegas");
  add_shooting(*sweep_cmd, sweep);
  sweep_cmd->add_option("--omegas", sweep.omegas)->required()->delimiter(',');

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Emitter emitter(out, json);
    if (*classify_cmd) return cmd_classify(triple, rel_tol, emitter);
    if (*tilde_cmd) return cmd_tilde(triple, rel_tol, emitter);
    if (*thresholds_cmd) return cmd_thresholds(tp, tq, emitter);
    if (*verify_cmd) {
      verify.negate_duality = fault == "duality";
      return cmd_verify(verify, emitter, err);
    }
    if (*shoot_cmd) return cmd_shoot(shoot, csv, emitter);
    if (*sweep_cmd) return cmd_sweep(sweep, csv, emitter, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IntegrationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace tripow::cli
