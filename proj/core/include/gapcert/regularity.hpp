#pragma once

#include <string>
#include <utility>

#include "gapcert/grid_function.hpp"

namespace gapcert {

/// A function space selector: alpha-Hoelder or bounded p-variation.
struct SpaceTag {
  enum class Kind { Holder, BVp };
  Kind kind = Kind::Holder;
  double param = 1.0;  // alpha for Holder, p for BVp

  static SpaceTag holder(double alpha);
  static SpaceTag bvp(double p);
  /// Parses "hol:0.5" / "bvp:2".
  static SpaceTag parse(const std::string& text);
  std::string str() const;
};

/// max |f(x_i)-f(x_j)| / |x_i-x_j|^alpha over all node pairs. A lower bound
/// for the seminorm of the underlying function; exact for piecewise-linear
/// data at alpha = 1 (the maximum is attained on adjacent pairs).
double holder_seminorm(const GridFunction& f, double alpha);

/// Largest p-variation over all sub-partitions of the grid, by dynamic
/// programming over accumulated p-th powers (one root at the end).
double bvp_seminorm(const GridFunction& f, double p);

/// Exhaustive maximum over every subset of nodes (with and without the
/// endpoints). Grids of more than 20 nodes are rejected.
double bvp_bruteforce_oracle(const GridFunction& f, double p);

/// Returns holder_seminorm(f, alpha) * span^alpha and checks that the
/// (1/alpha)-variation stays below it.
double holder_implies_bvp(const GridFunction& f, double alpha,
                          double eps_num = 1e-9);

struct RegularityNorm {
  SpaceTag space;
  double seminorm = 0.0;
  double sup_norm = 0.0;
  double diam_factor = 1.0;  // span^alpha for Holder, 1 for BVp
  double full_norm = 0.0;    // sup + diam_factor * seminorm
};

RegularityNorm compute_norm(const GridFunction& f, SpaceTag space);

/// (norm of fg, norm of f * norm of g) in the requested full norm, checked
/// for the algebra inequality first <= second.
std::pair<double, double> banach_product_check(const GridFunction& f,
                                               const GridFunction& g,
                                               SpaceTag space,
                                               double eps_num = 1e-9);

/// Full norm of phi - c with c = (sup phi + inf phi)/2, checked against the
/// bound (3/2) * diam_factor * seminorm(phi).
double centered_norm_excess(const GridFunction& phi, SpaceTag space,
                            double eps_num = 1e-9);

/// exp(t) - 1: operator-distance bound from a centered-potential norm t.
double exp_distance(double centered_norm);

}  // namespace gapcert
