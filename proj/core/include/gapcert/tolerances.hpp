#pragma once

#include <stdexcept>

namespace gapcert {

/// Numerical tolerances shared across the library. Every report embeds the
/// record that produced it.
struct Tolerances {
  double eps_root = 1e-12;  ///< residual |T(b_j(x)) - x| for implicit branches
  double eps_eig = 1e-10;   ///< eigendata residuals (sup / total-variation)
  double eps_num = 1e-9;    ///< slack for exact-arithmetic inequality checks
  double tol_disc = 0.02;   ///< relative slack for discretization artifacts

  void validate() const {
    if (!(eps_root > 0 && eps_eig > 0 && eps_num > 0 && tol_disc > 0))
      throw std::invalid_argument("Tolerances: all overrides must be positive");
  }
};

}  // namespace gapcert
