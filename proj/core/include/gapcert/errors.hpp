#pragma once

#include <stdexcept>
#include <string>

namespace gapcert {

/// Request exceeds what the implementation is sized for (e.g. exhaustive
/// enumeration on an oversized grid, transport supports above the LP cap).
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iteration did not reach the requested tolerance within the iteration cap.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double residual_primal,
                    double residual_dual, int iterations)
      : std::runtime_error(what),
        residual_primal(residual_primal),
        residual_dual(residual_dual),
        iterations(iterations) {}

  double residual_primal;
  double residual_dual;
  int iterations;
};

/// Input failed a structural validation (monotonicity, surjectivity, ...).
/// The message lists witness points.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gapcert
