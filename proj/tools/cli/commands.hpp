#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/output_record.hpp"

namespace tripow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct TripleArgs {
  double a = 0, b = 0, c = 0, p = 0, q = 0, r = 0;
};

struct ShootArgs {
  int n = 3;
  double omega = 0;
  std::vector<double> omegas;
  double p = 0, q = 0;
  double step = 1e-3;
  double r_max = 0;  // 0: 200 / sqrt(omega)
  double decay_tol = 1e-6;
  double alpha_tol = 1e-9;
};

struct VerifyArgs {
  std::uint64_t seed = 42;
  std::int64_t trials = 1000;
  std::optional<std::string> report_path;
  bool negate_duality = false;
};

// Each command writes its records through `out` and returns an exit code.
// Invalid arguments surface as DomainError; the caller maps them to 2.

int cmd_classify(const TripleArgs& args, double rel_tol, Emitter& out);
int cmd_tilde(const TripleArgs& args, double rel_tol, Emitter& out);
int cmd_thresholds(double p, double q, Emitter& out);
int cmd_verify(const VerifyArgs& args, Emitter& out, std::ostream& err);
int cmd_shoot(const ShootArgs& args, const std::optional<std::string>& csv,
              Emitter& out);
int cmd_sweep(const ShootArgs& args, const std::optional<std::string>& csv,
              Emitter& out, std::ostream& err);

}  // namespace tripow::cli
