#pragma once

#include <cstdint>

#include "gapcert/interval_maps.hpp"
#include "gapcert/regularity.hpp"

namespace gapcert {

/// Arithmetic trail of one certification run. All quantities are explicit so
/// the certificate can be audited line by line.
struct Certificate {
  SpaceTag space;
  double theta = 0.0;        // base contraction factor
  double D = 1.0;            // uniform-vs-seminorm constant
  double delta0 = 0.0;       // gap of the zero-potential operator
  double pi_bound = 0.0;     // bound on the mean-centering projection norm
  double tau0 = 1.0;         // condition number of the unperturbed eigenpair
  double diam_factor = 1.0;  // span^alpha for Holder spaces, 1 for BVp
  double radius = 0.0;       // admissible operator distance at delta = 0
  double threshold = 0.0;    // admissible potential seminorm
  double phi_seminorm = 0.0; // declared bound for the potential
  double epsilon = 0.0;      // operator distance implied by the declaration
  double certified_delta = 0.0;  // solved gap size (0 when not certified)
  bool certified = false;
};

/// (1 - theta) / (1 + D theta): gap size of a seminorm-contracting,
/// sup-dominated operator with eigenprobability.
double doeblin_fortet_gap(double theta, double D);

/// (2D + 2) / (D + 2): bound for mean-centering projections f -> f - mu(f)
/// when the seminorm is translation invariant.
double projection_norm_bound(double D);

/// delta0 (delta0 - delta) / (6 (1 + delta0 - delta) tau0 pi_norm): largest
/// operator distance that keeps a gap of size delta with constant 1.
double perturbation_radius(double delta0, double delta, double tau0,
                           double pi_norm);

/// Inverse of perturbation_radius in delta: the gap size retained at
/// operator distance epsilon. Returns delta0 at epsilon = 0 and 0 when
/// epsilon reaches or exceeds the delta = 0 radius (not certifiable).
double certified_gap_size(double delta0, double epsilon, double tau0,
                          double pi_norm);

/// (2 / (3 diam^alpha)) log(1 + (1-theta)^2 / (16 (1+theta))). Checked
/// internally against the assembled gap -> projection -> radius pipeline.
double holder_threshold(double alpha, double theta, double diam);

/// (2/3) log(1 + (K-1)^2 / (16 K (K+1))) with K = k^{1/p}. Same internal
/// consistency check.
double bvp_threshold(std::int64_t k, double p);

/// Limit of bvp_threshold as k -> infinity at p = 1: (2/3) log(1 + 1/16).
double bvp_threshold_limit();

/// End-to-end certification of a declared potential seminorm bound on the
/// requested space. Holder spaces use the map's declared (alpha, theta);
/// BVp spaces use theta = k^{-1/p}. D = 1 in both cases.
Certificate certify(const MapSpec& map, SpaceTag space,
                    double phi_seminorm_bound);

}  // namespace gapcert
