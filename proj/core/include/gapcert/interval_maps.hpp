#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gapcert/rng.hpp"

namespace gapcert {

enum class MetricKind { Interval, Circle };

/// Declared backward contraction class: on-average theta-contraction of the
/// inverse branches in the metric d^alpha, up to a branch-matching
/// permutation.
struct HolderClass {
  double alpha = 1.0;
  double theta = 0.5;
};

/// An interval map given through its k inverse branches, plus the forward
/// evaluator and the regularity classes it is declared to belong to.
/// Finitely many points may fail T^{-1}(x) = {b_1(x),...,b_k(x)}; they are
/// listed in exceptional_points.
struct MapSpec {
  std::string family;
  std::map<std::string, double> parameters;

  double a = 0.0;
  double b = 1.0;
  int k = 2;
  std::vector<std::function<double(double)>> branches;
  std::function<double(double)> forward;

  std::optional<HolderClass> holder_class;
  bool class_v = false;  // monotone branches with disjoint-interior images
  std::vector<double> exceptional_points;
  MetricKind metric = MetricKind::Interval;

  double branch(int j, double x) const;
  double distance(double x, double y) const;
  double diameter() const;
  bool is_exceptional(double x, double tol = 1e-12) const;
};

enum class DoublingVariant { Circle, Tent, Interval };
DoublingVariant doubling_variant_from_string(const std::string& name);
std::string to_string(DoublingVariant v);

/// Intermittent family on [0,1]: x -> x(1+(2x)^q) left of 1/2, 2x-1 right of
/// it. The left inverse branch is solved by bisection polished with Newton;
/// the declared contraction for exponent alpha is 1/2 + 2^{-(1+alpha)}.
MapSpec make_pomeau_manneville(double q, double alpha = 1.0,
                               double eps_root = 1e-12);

/// The three doubling variants: circle (2x mod 1 with the wraparound metric),
/// tent (2x / 2-2x), interval (2x mod 1 on [0,1], where x = 1 has no second
/// preimage and is listed as exceptional).
MapSpec make_doubling(DoublingVariant variant);

/// Continuous 2-to-1 map of [a,b]: rising on [a,c] onto [a,b], falling on
/// [c,b] onto [a,b]. Both pieces are checked for monotonicity and
/// surjectivity on a sample grid; failures raise validation_error with
/// witness points. Branches are inverted by bisection.
MapSpec make_unimodal(double a, double b, double c,
                      std::function<double(double)> rising,
                      std::function<double(double)> falling,
                      double eps_root = 1e-12);

/// Full tent map via make_unimodal (also carries the H(1,1/2) tag).
MapSpec make_tent();
/// Logistic map 4x(1-x) via make_unimodal.
MapSpec make_logistic();

/// Empirical lower bound for the best average contraction factor: max over
/// sampled pairs (y,z) of the minimum over branch matchings of
/// (1/k) sum_j d(b_j(y), b_sigma(j)(z))^alpha / d(y,z)^alpha.
/// The pair stream is a deterministic grid sweep followed by seeded uniform
/// pairs, so the estimate is non-decreasing in n_pairs for a fixed seed.
double estimate_theta(const MapSpec& map, double alpha, int n_pairs,
                      std::uint64_t seed = kDefaultSeed);

/// Exact minimum of (1/k) sum_j cost[j][sigma(j)] over permutations sigma.
/// Brute force for k <= 8, min-cost assignment above.
double min_assignment_mean(const std::vector<std::vector<double>>& cost);

/// max over sampled x (exceptional points excluded) and branches of
/// d(T(b_j(x)), x).
double branch_consistency_residual(const MapSpec& map, int n_samples,
                                   std::uint64_t seed = kDefaultSeed);

struct TilingReport {
  double max_gap = 0.0;      // uncovered length between consecutive images
  double max_overlap = 0.0;  // interior overlap between images
  bool covers = false;
};

/// Checks that the monotone branch images tile [a,b] (class V geometry).
TilingReport class_v_tiling(const MapSpec& map);

}  // namespace gapcert
