#include "tripow/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tripow/errors.hpp"

namespace tripow::oracle {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Representable range of log u (denormals excluded).
constexpr double kLogMin = -700.0;
constexpr double kLogMax = 700.0;

// log(b e^{(q-p)s} - c e^{(r-p)s}) at s = log u, -inf where it is <= 0.
double log_bracket(const TriplePower& f, double s) {
  const double x = std::log(f.c() / f.b()) + (f.r() - f.q()) * s;
  if (x >= 0.0) return kNegInf;
  return std::log(f.b()) + (f.q() - f.p()) * s + std::log(-std::expm1(x));
}

template <class Fn>
double golden_max(Fn&& fn, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = fn(x1), f2 = fn(x2);
  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = fn(x1);
    }
  }
  return std::max(f1, f2);
}

// Bisection for a sign change of fn between lo (where fn < 0 if
// left_negative) and hi, to absolute width `tol` in s.
template <class Fn>
double bisect(Fn&& fn, double lo, double hi, bool left_negative, double tol) {
  for (int i = 0; i < 400 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const bool negative = fn(mid) < 0.0;
    if (negative == left_negative)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void validate(const ScanConfig& cfg) {
  if (cfg.points < 1000) throw DomainError("scan requires points >= 1000");
  if (!(cfg.span >= 10.0) || !std::isfinite(cfg.span))
    throw DomainError("scan requires span >= 10");
  if (!(cfg.zero_band > 0.0 && cfg.zero_band <= 1e-6))
    throw DomainError("scan requires zero_band in (0, 1e-6]");
}

double grid_log_max(const TriplePower& f, const ScanConfig& cfg, bool refine) {
  validate(cfg);
  const double centre = log_turning_point(f);
  const double half = std::log(cfg.span);
  const double ds = 2.0 * half / (cfg.points - 1);
  double best = kNegInf;
  int best_i = 0;
  for (int i = 0; i < cfg.points; ++i) {
    const double v = log_bracket(f, centre - half + i * ds);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  if (!refine) return best;
  const double s = centre - half + best_i * ds;
  const auto fn = [&](double t) { return log_bracket(f, t); };
  return std::max(best, golden_max(fn, s - ds, s + ds));
}

TrichotomyCase scan_classify(const TriplePower& f, const ScanConfig& cfg) {
  // max(-a + g) compared with +-zero_band a, i.e. log(max g / a) against
  // log(1 +- zero_band).
  const double excess = grid_log_max(f, cfg) - std::log(f.a());
  if (excess > std::log1p(cfg.zero_band)) return TrichotomyCase::PositivePart;
  if (excess < std::log1p(-cfg.zero_band)) return TrichotomyCase::Negative;
  return TrichotomyCase::OneZero;
}

RootSet find_roots(const TriplePower& f, const ScanConfig& cfg) {
  RootSet out;
  const TrichotomyCase kind = scan_classify(f, cfg);
  const double centre = log_turning_point(f);
  if (kind == TrichotomyCase::Negative) return out;
  if (kind == TrichotomyCase::OneZero) {
    out.roots.push_back({std::exp(centre), Multiplicity::Double});
    return out;
  }

  const double log_a = std::log(f.a());
  const auto excess = [&](double s) { return log_bracket(f, s) - log_a; };
  // The bracket is unimodal with its peak at the centre, so each side holds
  // exactly one sign change once the window is wide enough.
  const double step = std::log(10.0);
  double half = std::log(cfg.span);
  double lo = centre - half;
  while (excess(lo) >= 0.0 && lo > kLogMin) {
    half += step;
    lo = std::max(centre - half, kLogMin);
  }
  half = std::log(cfg.span);
  double hi = centre + half;
  while (excess(hi) >= 0.0 && hi < kLogMax) {
    half += step;
    hi = std::min(centre + half, kLogMax);
  }
  constexpr double kTol = 1e-13;
  const double left = bisect(excess, lo, centre, true, kTol);
  const double right = bisect(excess, centre, hi, false, kTol);
  out.roots.push_back({std::exp(left), Multiplicity::Simple});
  out.roots.push_back({std::exp(right), Multiplicity::Simple});
  return out;
}

TildeEstimate tilde_fd_detailed(const TriplePower& f, double u,
                                double h_scale) {
  if (!(u > 0.0)) throw DomainError("tilde_fd requires u > 0");
  if (!(h_scale > 0.0 && h_scale <= 0.05))
    throw DomainError("tilde_fd requires h_scale in (0, 0.05]");
  const double h = h_scale * u;
  const auto diff = [h](auto&& fn, double v) {
    return (fn(v - 2.0 * h) - 8.0 * fn(v - h) + 8.0 * fn(v + h) -
            fn(v + 2.0 * h)) /
           (12.0 * h);
  };
  const auto value = [&f](double v) { return eval(f, v); };
  const auto slope = [&](double v) { return diff(value, v); };
  const auto u_slope = [&](double v) { return v * slope(v); };

  const double fu = eval(f, u);
  const double d1 = slope(u);
  const double dw = diff(u_slope, u);
  const double first = dw * fu;
  const double second = u * d1 * d1;
  return {first - second, std::abs(first) + std::abs(second)};
}

}  // namespace tripow::oracle
