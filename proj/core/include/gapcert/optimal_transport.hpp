#pragma once

#include <cstdint>
#include <vector>

#include "gapcert/discrete_measure.hpp"
#include "gapcert/grid_function.hpp"
#include "gapcert/interval_maps.hpp"
#include "gapcert/rng.hpp"

namespace gapcert {

/// W_1 between equal-mass measures through the one-dimensional closed form
/// (integral of |F_mu - F_nu| across the merged breakpoints). Exact.
double w1(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
          double eps_num = 1e-9);

struct TransportSolution {
  double cost = 0.0;
  double dual_value = 0.0;
  double duality_gap = 0.0;  // cost - dual_value, >= 0 at optimality
  int augmentations = 0;
};

/// Exact optimum of the finite transportation problem with cost |x-y|^alpha,
/// by successive shortest augmenting paths with potentials. The returned
/// solution is certified by its duality gap; a gap above 1e-9 raises.
TransportSolution solve_transport(const DiscreteMeasure& mu,
                                  const DiscreteMeasure& nu, double alpha);

/// Wasserstein distance for the concave cost d^alpha. Supports of more than
/// 200 atoms are rejected (desk-scale exact LP only).
double w_alpha_lp(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                  double alpha);

/// Pushforward under the backward random walk: each atom at x splits into k
/// atoms at b_j(x) carrying weight/k.
DiscreteMeasure dual_pushforward(const MapSpec& map,
                                 const DiscreteMeasure& mu);

struct ContractionReport {
  double alpha = 1.0;
  double theta = 0.0;      // declared bound
  int trials = 0;
  int used = 0;            // degenerate pairs are resampled
  double max_ratio = 0.0;  // max W(L*mu, L*nu) / W(mu, nu)
  bool pass = false;
  std::uint64_t seed = 0;
};

/// Samples random discrete probability pairs and checks the dual-operator
/// contraction ratio in W_alpha against the declared theta.
ContractionReport dual_contraction_check(const MapSpec& map, double alpha,
                                         int trials,
                                         std::uint64_t seed = kDefaultSeed,
                                         int atoms = 24,
                                         double eps_num = 1e-9);

struct DualityReport {
  double alpha = 1.0;
  double w_value = 0.0;
  int checked = 0;
  std::vector<int> rejected;  // candidates with seminorm above 1 + eps
  double max_gap = 0.0;       // largest |mu(f) - nu(f)| among accepted
  bool pass = false;
};

/// Weak Kantorovich duality: every candidate with unit seminorm (measured on
/// the union of the support points) satisfies |mu(f) - nu(f)| <= W_alpha.
DualityReport kantorovich_duality_check(
    const DiscreteMeasure& mu, const DiscreteMeasure& nu, double alpha,
    const std::vector<GridFunction>& candidates, double eps_num = 1e-9);

}  // namespace gapcert
