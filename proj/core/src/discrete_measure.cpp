#include "gapcert/discrete_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gapcert {

DiscreteMeasure::DiscreteMeasure(std::vector<double> points,
                                 std::vector<double> weights) {
  if (points.size() != weights.size())
    throw std::invalid_argument("DiscreteMeasure: point/weight size mismatch");
  if (points.empty())
    throw std::invalid_argument("DiscreteMeasure: empty support");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i]) || !std::isfinite(weights[i]))
      throw std::invalid_argument("DiscreteMeasure: non-finite entry");
    if (weights[i] < 0.0)
      throw std::invalid_argument("DiscreteMeasure: negative weight");
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });
  points_.reserve(points.size());
  weights_.reserve(points.size());
  for (std::size_t idx : order) {
    if (!points_.empty() && points[idx] == points_.back()) {
      weights_.back() += weights[idx];  // merge duplicate atoms
    } else {
      points_.push_back(points[idx]);
      weights_.push_back(weights[idx]);
    }
  }
}

DiscreteMeasure DiscreteMeasure::dirac(double x, double weight) {
  return DiscreteMeasure({x}, {weight});
}

DiscreteMeasure DiscreteMeasure::uniform_on(std::vector<double> points) {
  const double w = 1.0 / static_cast<double>(points.size());
  std::vector<double> weights(points.size(), w);
  return DiscreteMeasure(std::move(points), std::move(weights));
}

double DiscreteMeasure::mass() const {
  double sum = 0.0;
  for (double w : weights_) sum += w;
  return sum;
}

bool DiscreteMeasure::is_probability(double eps) const {
  return std::abs(mass() - 1.0) <= eps;
}

DiscreteMeasure DiscreteMeasure::normalized() const {
  const double total = mass();
  if (!(total > 0.0))
    throw std::domain_error("DiscreteMeasure: cannot normalize zero mass");
  std::vector<double> weights = weights_;
  for (double& w : weights) w /= total;
  DiscreteMeasure out;
  out.points_ = points_;
  out.weights_ = std::move(weights);
  return out;
}

double DiscreteMeasure::integrate(const GridFunction& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i)
    sum += weights_[i] * f(points_[i]);
  return sum;
}

}  // namespace gapcert
