#pragma once

#include <stdexcept>
#include <string>

namespace tripow {

/// Raised when an argument falls outside the domain of an operation or
/// violates the invariants of a value type.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The radial integrator produced a non-finite state.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double last_finite_r)
      : std::runtime_error(what), last_finite_r_(last_finite_r) {}

  double last_finite_r() const noexcept { return last_finite_r_; }

 private:
  double last_finite_r_;
};

}  // namespace tripow
