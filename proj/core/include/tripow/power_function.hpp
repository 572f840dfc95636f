#pragma once

#include <string_view>

namespace tripow {

/// The nonlinearity f(u) = -a u^p + b u^q - c u^r on u >= 0.
///
/// Invariants: a, b, c > 0 and 0 < p < q < r. The lower bound on p makes
/// f and u f'(u) extend continuously to u = 0.
class TriplePower {
 public:
  /// Throws DomainError naming the first violated invariant.
  TriplePower(double a, double b, double c, double p, double q, double r);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double r() const noexcept { return r_; }

  /// Same exponents and b, c with a different leading coefficient.
  TriplePower with_a(double a) const { return {a, b_, c_, p_, q_, r_}; }

  friend bool operator==(const TriplePower&, const TriplePower&) = default;

 private:
  double a_, b_, c_, p_, q_, r_;
};

enum class TrichotomyCase {
  PositivePart,  // case (a): f > 0 somewhere on u > 0
  OneZero,       // case (b): a single double zero at the turning point
  Negative,      // case (c): f < 0 on all of u > 0
};

/// "positive-part", "one-zero", "negative".
std::string_view to_string(TrichotomyCase c) noexcept;
/// "(a)", "(b)", "(c)".
std::string_view case_label(TrichotomyCase c) noexcept;

/// The opposite case under the tilde transform: (a) <-> (c), (b) fixed.
TrichotomyCase dual(TrichotomyCase c) noexcept;

struct TildeResult {
  TriplePower function;
};

/// f(u). Throws DomainError for u < 0; f(0) = 0.
double eval(const TriplePower& f, double u);

/// f'(u) (order 1) or f''(u) (order 2). Throws DomainError for u <= 0 or an
/// unsupported order.
double eval_derivative(const TriplePower& f, double u, int order);

/// a u^p + b u^q + c u^r, the magnitude against which residuals of f are
/// measured.
double term_scale(const TriplePower& f, double u);

/// T = max_{u>0} (b u^{q-p} - c u^{r-p}), the largest a for which f still
/// has positive parts. May overflow to +inf or underflow to 0 for extreme
/// parameters; log_threshold() is always finite.
double threshold(const TriplePower& f);
double log_threshold(const TriplePower& f);

/// The maximizer u* of b u^{q-p} - c u^{r-p}.
double turning_point(const TriplePower& f);
double log_turning_point(const TriplePower& f);

inline constexpr double kDefaultRelTol = 1e-12;

/// Places f in the trichotomy by comparing a with threshold(f). OneZero is
/// reported inside the band |a - T| <= rel_tol * max(a, T).
/// rel_tol must lie in (0, 1e-6].
TrichotomyCase classify(const TriplePower& f, double rel_tol = kDefaultRelTol);

/// Closed form of (u f'(u))' f(u) - u f'(u)^2, which is again a triple
/// power with exponents (p+q-1, p+r-1, q+r-1). Throws DomainError when
/// p + q <= 1 (the result would violate the p > 0 invariant).
TildeResult tilde(const TriplePower& f);

/// F(u) = int_0^u f, i.e. coefficients divided by (exponent + 1) and
/// exponents shifted by one.
TriplePower antiderivative(const TriplePower& f);

}  // namespace tripow
