#pragma once

#include <vector>

#include "gapcert/grid_function.hpp"

namespace gapcert {

/// Finitely supported nonnegative measure on an interval. Support points are
/// kept sorted strictly increasing; construction merges duplicate points by
/// adding their weights.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  DiscreteMeasure(std::vector<double> points, std::vector<double> weights);

  static DiscreteMeasure dirac(double x, double weight = 1.0);
  static DiscreteMeasure uniform_on(std::vector<double> points);

  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return points_.size(); }
  double mass() const;
  bool is_probability(double eps = 1e-9) const;
  DiscreteMeasure normalized() const;

  /// sum_i w_i f(x_i) with f evaluated by its interpolation rule.
  double integrate(const GridFunction& f) const;

 private:
  std::vector<double> points_;
  std::vector<double> weights_;
};

}  // namespace gapcert
