#include "tripow/thresholds.hpp"

#include <cmath>

#include "tripow/errors.hpp"

namespace tripow {

namespace {

void require_exponents(double p, double q) {
  if (!(std::isfinite(p) && std::isfinite(q)))
    throw DomainError("requires finite exponents");
  if (!(p > 1.0)) throw DomainError("requires p > 1");
  if (!(q > p)) throw DomainError("requires q > p");
}

}  // namespace

DoublePower::DoublePower(double omega, double p, double q)
    : omega_(omega), p_(p), q_(q) {
  if (!(std::isfinite(omega) && omega > 0.0))
    throw DomainError("requires omega > 0");
  require_exponents(p, q);
}

TriplePower as_triple(const DoublePower& g) {
  return {g.omega(), 1.0, 1.0, 1.0, g.p(), g.q()};
}

TriplePower antiderivative(const DoublePower& g) {
  return {g.omega() / 2.0, 1.0 / (g.p() + 1.0), 1.0 / (g.q() + 1.0),
          2.0,             g.p() + 1.0,         g.q() + 1.0};
}

double omega_threshold(double p, double q) {
  require_exponents(p, q);
  const double base = (p - 1.0) * (q + 1.0) / ((p + 1.0) * (q - 1.0));
  return 2.0 * (q - p) / ((p + 1.0) * (q - 1.0)) *
         std::pow(base, (p - 1.0) / (q - p));
}

double eta_threshold(double p, double q) {
  require_exponents(p, q);
  return (q - p) / (q - 1.0) *
         std::pow((p - 1.0) / (q - 1.0), (p - 1.0) / (q - p));
}

bool existence_predicted(const DoublePower& g) {
  return g.omega() < omega_threshold(g.p(), g.q());
}

bool uniqueness_predicted(const DoublePower& g) {
  return g.omega() < eta_threshold(g.p(), g.q());
}

}  // namespace tripow
