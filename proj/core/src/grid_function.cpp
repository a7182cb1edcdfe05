#include "gapcert/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gapcert {

GridFunction::GridFunction(std::vector<double> xs, std::vector<double> values,
                           InterpKind interp)
    : xs_(std::move(xs)), values_(std::move(values)), interp_(interp) {
  if (xs_.empty()) throw std::invalid_argument("GridFunction: empty grid");
  if (xs_.size() != values_.size())
    throw std::invalid_argument("GridFunction: grid/value size mismatch");
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    if (!(xs_[i] < xs_[i + 1]))
      throw std::invalid_argument(
          "GridFunction: grid must be strictly increasing");
  for (double x : xs_)
    if (!std::isfinite(x))
      throw std::invalid_argument("GridFunction: non-finite node");
  for (double v : values_)
    if (!std::isfinite(v))
      throw std::invalid_argument("GridFunction: non-finite value");
}

double GridFunction::operator()(double x) const {
  if (x <= xs_.front()) return values_.front();
  if (x >= xs_.back()) return values_.back();
  // first node strictly above x
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  std::size_t lo = hi - 1;
  if (x == xs_[lo]) return values_[lo];
  if (interp_ == InterpKind::PiecewiseConstantLeft) return values_[lo];
  double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return values_[lo] + t * (values_[hi] - values_[lo]);
}

double GridFunction::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

double GridFunction::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double GridFunction::sup_norm() const {
  double s = 0.0;
  for (double v : values_) s = std::max(s, std::abs(v));
  return s;
}

std::vector<double> GridFunction::uniform_grid(double a, double b,
                                               std::size_t m) {
  if (!(a < b)) throw std::invalid_argument("uniform_grid: need a < b");
  if (m < 2) throw std::invalid_argument("uniform_grid: need m >= 2");
  std::vector<double> xs(m);
  for (std::size_t i = 0; i < m; ++i)
    xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(m - 1);
  xs.back() = b;
  return xs;
}

GridFunction GridFunction::sample(const std::function<double(double)>& fn,
                                  std::vector<double> grid,
                                  InterpKind interp) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = fn(grid[i]);
  return GridFunction(std::move(grid), std::move(values), interp);
}

GridFunction GridFunction::constant(double c, std::vector<double> grid,
                                    InterpKind interp) {
  std::vector<double> values(grid.size(), c);
  return GridFunction(std::move(grid), std::move(values), interp);
}

bool same_grid(const GridFunction& f, const GridFunction& g) {
  return f.xs() == g.xs();
}

GridFunction shifted(const GridFunction& f, double c) {
  std::vector<double> values = f.values();
  for (double& v : values) v += c;
  return GridFunction(f.xs(), std::move(values), f.interp());
}

GridFunction scaled(const GridFunction& f, double lambda) {
  std::vector<double> values = f.values();
  for (double& v : values) v *= lambda;
  return GridFunction(f.xs(), std::move(values), f.interp());
}

GridFunction product(const GridFunction& f, const GridFunction& g) {
  if (!same_grid(f, g))
    throw std::invalid_argument("product: functions on different grids");
  std::vector<double> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    values[i] = f.values()[i] * g.values()[i];
  return GridFunction(f.xs(), std::move(values), f.interp());
}

}  // namespace gapcert
