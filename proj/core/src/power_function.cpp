#include "tripow/power_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tripow/errors.hpp"

namespace tripow {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw DomainError(message);
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

TriplePower::TriplePower(double a, double b, double c, double p, double q,
                         double r)
    : a_(a), b_(b), c_(c), p_(p), q_(q), r_(r) {
  require(positive_finite(a), "requires a > 0");
  require(positive_finite(b), "requires b > 0");
  require(positive_finite(c), "requires c > 0");
  require(std::isfinite(p) && std::isfinite(q) && std::isfinite(r),
          "requires finite exponents");
  require(p < q && q < r, "requires p < q < r");
  require(p > 0.0, "requires p > 0");
}

std::string_view to_string(TrichotomyCase c) noexcept {
  switch (c) {
    case TrichotomyCase::PositivePart: return "positive-part";
    case TrichotomyCase::OneZero: return "one-zero";
    case TrichotomyCase::Negative: return "negative";
  }
  return "?";
}

std::string_view case_label(TrichotomyCase c) noexcept {
  switch (c) {
    case TrichotomyCase::PositivePart: return "(a)";
    case TrichotomyCase::OneZero: return "(b)";
    case TrichotomyCase::Negative: return "(c)";
  }
  return "?";
}

TrichotomyCase dual(TrichotomyCase c) noexcept {
  switch (c) {
    case TrichotomyCase::PositivePart: return TrichotomyCase::Negative;
    case TrichotomyCase::Negative: return TrichotomyCase::PositivePart;
    case TrichotomyCase::OneZero: break;
  }
  return TrichotomyCase::OneZero;
}

double eval(const TriplePower& f, double u) {
  require(u >= 0.0, "eval requires u >= 0");
  if (u == 0.0) return 0.0;
  if (u > 1.0) {
    // Factored so the bracket stays finite for longer as u grows.
    const double bracket = -f.a() + f.b() * std::pow(u, f.q() - f.p()) -
                           f.c() * std::pow(u, f.r() - f.p());
    return std::pow(u, f.p()) * bracket;
  }
  return -f.a() * std::pow(u, f.p()) + f.b() * std::pow(u, f.q()) -
         f.c() * std::pow(u, f.r());
}

double eval_derivative(const TriplePower& f, double u, int order) {
  require(u > 0.0, "eval_derivative requires u > 0");
  const double p = f.p(), q = f.q(), r = f.r();
  switch (order) {
    case 1:
      return -f.a() * p * std::pow(u, p - 1.0) +
             f.b() * q * std::pow(u, q - 1.0) -
             f.c() * r * std::pow(u, r - 1.0);
    case 2:
      return -f.a() * p * (p - 1.0) * std::pow(u, p - 2.0) +
             f.b() * q * (q - 1.0) * std::pow(u, q - 2.0) -
             f.c() * r * (r - 1.0) * std::pow(u, r - 2.0);
    default:
      throw DomainError("eval_derivative supports order 1 or 2");
  }
}

double term_scale(const TriplePower& f, double u) {
  require(u >= 0.0, "term_scale requires u >= 0");
  if (u == 0.0) return 0.0;
  return f.a() * std::pow(u, f.p()) + f.b() * std::pow(u, f.q()) +
         f.c() * std::pow(u, f.r());
}

// With g(u) = b u^{q-p} - c u^{r-p}, g'(u*) = 0 gives
// u*^{r-q} = b (q-p) / (c (r-p)) and g(u*) = b (r-q)/(r-p) u*^{q-p}.

double threshold(const TriplePower& f) {
  const double p = f.p(), q = f.q(), r = f.r();
  const double ratio = f.b() * (q - p) / (f.c() * (r - p));
  return f.b() * (r - q) / (r - p) * std::pow(ratio, (q - p) / (r - q));
}

double log_threshold(const TriplePower& f) {
  const double p = f.p(), q = f.q(), r = f.r();
  const double log_ratio =
      std::log(f.b() / f.c()) + std::log((q - p) / (r - p));
  return std::log(f.b()) + std::log((r - q) / (r - p)) +
         (q - p) / (r - q) * log_ratio;
}

double log_turning_point(const TriplePower& f) {
  const double p = f.p(), q = f.q(), r = f.r();
  return (std::log(f.b() / f.c()) + std::log((q - p) / (r - p))) / (r - q);
}

double turning_point(const TriplePower& f) {
  return std::exp(log_turning_point(f));
}

TrichotomyCase classify(const TriplePower& f, double rel_tol) {
  require(rel_tol > 0.0 && rel_tol <= 1e-6,
          "classify requires rel_tol in (0, 1e-6]");
  const double a = f.a();
  const double t = threshold(f);
  if (std::isnormal(t) && std::isfinite(t)) {
    if (std::abs(a - t) <= rel_tol * std::max(a, t))
      return TrichotomyCase::OneZero;
    return a < t ? TrichotomyCase::PositivePart : TrichotomyCase::Negative;
  }
  // T is not representable; compare on the log scale, where
  // |a - T| <= tol max(a, T)  <=>  1 - exp(-|log a - log T|) <= tol.
  const double gap = std::log(a) - log_threshold(f);
  if (-std::expm1(-std::abs(gap)) <= rel_tol) return TrichotomyCase::OneZero;
  return gap < 0.0 ? TrichotomyCase::PositivePart : TrichotomyCase::Negative;
}

TildeResult tilde(const TriplePower& f) {
  const double a = f.a(), b = f.b(), c = f.c();
  const double p = f.p(), q = f.q(), r = f.r();
  require(p + q > 1.0, "tilde requires p + q > 1");
  const double qp = q - p, rp = r - p, rq = r - q;
  return {TriplePower(a * b * qp * qp, c * a * rp * rp, b * c * rq * rq,
                      p + q - 1.0, p + r - 1.0, q + r - 1.0)};
}

TriplePower antiderivative(const TriplePower& f) {
  return {f.a() / (f.p() + 1.0), f.b() / (f.q() + 1.0), f.c() / (f.r() + 1.0),
          f.p() + 1.0, f.q() + 1.0, f.r() + 1.0};
}

}  // namespace tripow
