#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gapcert/discrete_measure.hpp"
#include "gapcert/grid_function.hpp"
#include "gapcert/interval_maps.hpp"
#include "gapcert/regularity.hpp"
#include "gapcert/tolerances.hpp"

namespace gapcert {

enum class BasisKind { PiecewiseLinear, PiecewiseConstant };
InterpKind interp_for(BasisKind basis);

/// Pointwise transfer-operator action:
///   (1/k) sum_j exp(phi(b_j(x))) f(b_j(x)),
/// with phi and f evaluated through their interpolation rules.
double apply(const MapSpec& map, const GridFunction& phi,
             const GridFunction& f, double x);

/// Collocation matrix of the operator on a uniform m-point grid: the action
/// on coefficient vectors agrees with apply() at every node. Rows are
/// assembled in parallel; the result is deterministic for fixed inputs.
struct DiscretizedOperator {
  MapSpec map;
  GridFunction potential;
  std::vector<double> grid;
  BasisKind basis = BasisKind::PiecewiseLinear;
  Eigen::MatrixXd matrix;

  int size() const { return static_cast<int>(grid.size()); }
  GridFunction to_grid_function(const Eigen::VectorXd& coeffs) const;
  /// Full norm used for decay measurements: Hoelder-1 for the linear basis,
  /// BV-1 for the constant basis.
  double full_norm(const Eigen::VectorXd& coeffs) const;
};

DiscretizedOperator assemble(const MapSpec& map, const GridFunction& phi,
                             int m, BasisKind basis);

/// Leading eigendata of a discretized operator: eigenvalue, positive
/// eigenfunction h (normalized so nu(h) = 1), dual eigenprobability nu, the
/// product measure mu, and a power-iteration estimate of the modulus of the
/// subdominant spectrum obtained by iterating f -> A(f - nu(f) h).
struct SpectralData {
  double lambda = 0.0;
  GridFunction h;
  DiscreteMeasure nu;
  DiscreteMeasure mu;
  double subdominant_modulus = 0.0;
  int iterations = 0;
  double residual_h = 0.0;   // sup norm of A h - lambda h
  double residual_nu = 0.0;  // total variation of A* nu - lambda nu
};

SpectralData eigendata(const DiscretizedOperator& op,
                       const Tolerances& tol = {}, int max_iter = 100000);

/// Probability with weights h(x_i) nu_i, renormalized.
DiscreteMeasure rpf_measure(const SpectralData& sd);

/// max over test functions of |int f(T(.)) dmu - int f dmu| / ||f||, the
/// norm being the full Lipschitz norm of the test function.
double invariance_residual(const MapSpec& map, const DiscreteMeasure& mu,
                           const std::vector<GridFunction>& tests);

struct LasotaYorkeReport {
  SpaceTag space;
  double bound = 0.0;  // theta for Holder, k^{-1/p} for BVp
  double tol_disc = 0.02;
  int samples = 0;
  int used = 0;
  double max_ratio = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  int grid_size = 0;
};

/// Seminorm contraction of the zero-potential operator on random grid
/// functions: seminorm(L0 f) / seminorm(f) against the declared bound.
LasotaYorkeReport lasota_yorke_check(const MapSpec& map, SpaceTag space,
                                     int samples, int m = 512,
                                     std::uint64_t seed = kDefaultSeed,
                                     double tol_disc = 0.02);

struct GapDecayReport {
  double delta = 0.0;
  int n_max = 0;
  int trials = 0;
  double sup_ratio = 0.0;       // sup_n ||A^n f|| / (lambda^n (1-delta)^n ||f||), nu(f)=0
  double sup_ratio_split = 0.0; // same for R^n f = A^n f - lambda^n nu(f) h, any f
  double tail_slope = 0.0;      // geometric growth of the ratio near n_max
  bool diverging = false;
  bool pass = false;
  std::uint64_t seed = 0;
};

/// Monte-Carlo witness of the decay-below-lambda property for gap size
/// delta, in the operator's full norm. Also exercises the equivalent
/// rank-one-split form on unprojected inputs.
GapDecayReport gap_decay_check(const DiscretizedOperator& op,
                               const SpectralData& sd, double delta,
                               int n_max, int trials,
                               std::uint64_t seed = kDefaultSeed);

/// C_n = | lambda^{-n} int f A^n(g h) dnu - mu(f) mu(g) | for n = 0..n_max,
/// computed spectrally. f and g must live on the operator grid.
std::vector<double> correlation_sequence(const DiscretizedOperator& op,
                                         const SpectralData& sd,
                                         const GridFunction& f,
                                         const GridFunction& g, int n_max);

}  // namespace gapcert
