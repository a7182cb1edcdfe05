#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gapcert {

enum class InterpKind {
  PiecewiseLinear,
  PiecewiseConstantLeft,  // f(x) = f(x_i) on [x_i, x_{i+1})
};

/// Values of a function on a finite partition x_0 < ... < x_n of an interval,
/// together with the rule used to evaluate between nodes. Evaluation at a
/// node returns the stored value exactly.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(std::vector<double> xs, std::vector<double> values,
               InterpKind interp = InterpKind::PiecewiseLinear);

  /// Interpolated evaluation; clamps to the end values outside [front, back].
  double operator()(double x) const;

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& values() const { return values_; }
  InterpKind interp() const { return interp_; }
  std::size_t size() const { return xs_.size(); }
  double front() const { return xs_.front(); }
  double back() const { return xs_.back(); }
  double span() const { return xs_.back() - xs_.front(); }
  double max_value() const;
  double min_value() const;
  double sup_norm() const;

  /// Nodes a + i (b-a)/(m-1) for i = 0..m-1.
  static std::vector<double> uniform_grid(double a, double b, std::size_t m);

  /// Samples fn on the given grid.
  static GridFunction sample(const std::function<double(double)>& fn,
                             std::vector<double> grid,
                             InterpKind interp = InterpKind::PiecewiseLinear);

  static GridFunction constant(double c, std::vector<double> grid,
                               InterpKind interp = InterpKind::PiecewiseLinear);

 private:
  std::vector<double> xs_;
  std::vector<double> values_;
  InterpKind interp_ = InterpKind::PiecewiseLinear;
};

/// True when f and g share the identical node sequence.
bool same_grid(const GridFunction& f, const GridFunction& g);

GridFunction shifted(const GridFunction& f, double c);
GridFunction scaled(const GridFunction& f, double lambda);
/// Pointwise product; requires same grid.
GridFunction product(const GridFunction& f, const GridFunction& g);

}  // namespace gapcert
