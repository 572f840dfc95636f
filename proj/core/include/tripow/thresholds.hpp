#pragma once

#include "tripow/power_function.hpp"

namespace tripow {

/// The double-power nonlinearity f(u) = -omega u + u^p - u^q with
/// omega > 0 and q > p > 1.
class DoublePower {
 public:
  DoublePower(double omega, double p, double q);

  double omega() const noexcept { return omega_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  friend bool operator==(const DoublePower&, const DoublePower&) = default;

 private:
  double omega_, p_, q_;
};

/// f as a triple power: (a, b, c) = (omega, 1, 1), exponents (1, p, q).
TriplePower as_triple(const DoublePower& g);

/// F(u) = -(omega/2) u^2 + u^{p+1}/(p+1) - u^{q+1}/(q+1).
TriplePower antiderivative(const DoublePower& g);

/// Existence threshold
///   omega_{p,q} = 2(q-p)/((p+1)(q-1)) [(p-1)(q+1)/((p+1)(q-1))]^{(p-1)/(q-p)}.
/// Throws DomainError unless q > p > 1.
double omega_threshold(double p, double q);

/// Uniqueness threshold
///   eta_{p,q} = (q-p)/(q-1) [(p-1)/(q-1)]^{(p-1)/(q-p)}.
/// Throws DomainError unless q > p > 1.
double eta_threshold(double p, double q);

/// omega < omega_{p,q}: F > 0 somewhere, so a ground state exists.
bool existence_predicted(const DoublePower& g);

/// omega < eta_{p,q}: f > 0 somewhere, equivalently the tilde of f stays
/// negative, so the ground state is unique.
bool uniqueness_predicted(const DoublePower& g);

}  // namespace tripow
