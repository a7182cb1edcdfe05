#include "gapcert/transfer_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gapcert/errors.hpp"
#include "gapcert/parallel.hpp"
#include "gapcert/rng.hpp"

namespace gapcert {

InterpKind interp_for(BasisKind basis) {
  return basis == BasisKind::PiecewiseLinear
             ? InterpKind::PiecewiseLinear
             : InterpKind::PiecewiseConstantLeft;
}

double apply(const MapSpec& map, const GridFunction& phi,
             const GridFunction& f, double x) {
  const double tol = 1e-12 * std::max(1.0, map.b - map.a);
  if (x < map.a - tol || x > map.b + tol)
    throw std::domain_error("apply: point outside the domain");
  x = std::clamp(x, map.a, map.b);
  double acc = 0.0;
  for (int j = 0; j < map.k; ++j) {
    const double y = map.branch(j, x);
    acc += std::exp(phi(y)) * f(y);
  }
  return acc / map.k;
}

GridFunction DiscretizedOperator::to_grid_function(
    const Eigen::VectorXd& coeffs) const {
  std::vector<double> values(coeffs.data(), coeffs.data() + coeffs.size());
  return GridFunction(grid, std::move(values), interp_for(basis));
}

double DiscretizedOperator::full_norm(const Eigen::VectorXd& coeffs) const {
  const std::size_t m = grid.size();
  double sup = 0.0;
  for (std::size_t i = 0; i < m; ++i) sup = std::max(sup, std::abs(coeffs[i]));
  if (basis == BasisKind::PiecewiseLinear) {
    // Lipschitz seminorm: the pairwise maximum lives on adjacent nodes
    double lip = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i)
      lip = std::max(lip, std::abs(coeffs[i + 1] - coeffs[i]) /
                              (grid[i + 1] - grid[i]));
    return sup + (grid.back() - grid.front()) * lip;
  }
  double var = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i)
    var += std::abs(coeffs[i + 1] - coeffs[i]);
  return sup + var;
}

namespace {

// Mirrors GridFunction evaluation so that the matrix action reproduces
// apply() at the nodes bit-for-bit.
void scatter_basis_weights(const std::vector<double>& grid, double y,
                           BasisKind basis, double w, double* row) {
  const std::size_t m = grid.size();
  if (y <= grid.front()) {
    row[0] += w;
    return;
  }
  if (y >= grid.back()) {
    row[m - 1] += w;
    return;
  }
  const auto it = std::upper_bound(grid.begin(), grid.end(), y);
  const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  const std::size_t lo = hi - 1;
  if (y == grid[lo] || basis == BasisKind::PiecewiseConstant) {
    row[lo] += w;
    return;
  }
  const double t = (y - grid[lo]) / (grid[hi] - grid[lo]);
  row[lo] += w * (1.0 - t);
  row[hi] += w * t;
}

}  // namespace

DiscretizedOperator assemble(const MapSpec& map, const GridFunction& phi,
                             int m, BasisKind basis) {
  if (m < 3) throw std::domain_error("assemble: need a grid of at least 3");
  DiscretizedOperator op;
  op.map = map;
  op.potential = phi;
  op.grid = GridFunction::uniform_grid(map.a, map.b, static_cast<std::size_t>(m));
  op.basis = basis;
  op.matrix = Eigen::MatrixXd::Zero(m, m);

  const double span_tol = 1e-9 * std::max(1.0, map.b - map.a);
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t i) {
    std::vector<double> row(static_cast<std::size_t>(m), 0.0);
    const double x = op.grid[i];
    for (int j = 0; j < map.k; ++j) {
      double y;
      try {
        y = map.branch(j, x);
      } catch (const std::exception& e) {
        throw std::runtime_error("assemble: branch " + std::to_string(j) +
                                 " failed at node " + std::to_string(i) +
                                 ": " + e.what());
      }
      if (y < map.a - span_tol || y > map.b + span_tol)
        throw std::runtime_error("assemble: branch " + std::to_string(j) +
                                 " left the domain at node " +
                                 std::to_string(i));
      y = std::clamp(y, map.a, map.b);
      const double w = std::exp(phi(y)) / map.k;
      scatter_basis_weights(op.grid, y, basis, w, row.data());
    }
    for (int l = 0; l < m; ++l) op.matrix(static_cast<int>(i), l) = row[l];
  });
  return op;
}

SpectralData eigendata(const DiscretizedOperator& op, const Tolerances& tol,
                       int max_iter) {
  tol.validate();
  const int m = op.size();
  const Eigen::MatrixXd& A = op.matrix;

  Eigen::VectorXd h = Eigen::VectorXd::Ones(m);
  Eigen::VectorXd z = Eigen::VectorXd::Constant(m, 1.0 / m);
  double lambda = 1.0;
  double res_h = std::numeric_limits<double>::infinity();
  double res_z = res_h;
  int iter = 0;
  while (iter < max_iter) {
    ++iter;
    const Eigen::VectorXd Ah = A * h;
    const Eigen::VectorXd Az = A.transpose() * z;
    lambda = z.dot(Ah) / z.dot(h);
    res_h = (Ah - lambda * h).lpNorm<Eigen::Infinity>();
    res_z = (Az - lambda * z).lpNorm<1>();
    if (res_h <= tol.eps_eig && res_z <= tol.eps_eig) break;
    const double hsup = Ah.lpNorm<Eigen::Infinity>();
    const double zsum = Az.sum();
    if (!(hsup > 0.0) || !(zsum > 0.0))
      throw convergence_error("eigendata: iterate collapsed", res_h, res_z,
                              iter);
    h = Ah / hsup;
    z = Az / zsum;
  }
  if (res_h > tol.eps_eig || res_z > tol.eps_eig)
    throw convergence_error("eigendata: power iteration did not converge",
                            res_h, res_z, iter);

  z /= z.sum();
  const double scale = z.dot(h);
  if (!(scale > 0.0))
    throw convergence_error("eigendata: degenerate normalization", res_h,
                            res_z, iter);
  h /= scale;  // nu(h) = 1
  if (h.minCoeff() <= 0.0)
    throw convergence_error("eigendata: eigenfunction lost positivity", res_h,
                            res_z, iter);

  // subdominant modulus: iterate the deflated operator f -> A(f - nu(f) h)
  // and read off the decay ratio of the full norm
  std::mt19937_64 rng(kDefaultSeed ^ 0x9e3779b97f4a7c15ULL);
  Eigen::VectorXd g(m);
  for (int i = 0; i < m; ++i) g[i] = uniform_in(rng, -1.0, 1.0);
  g -= z.dot(g) * h;
  double norm = op.full_norm(g);
  double subdominant = 0.0;
  int sub_iters = 0;
  if (norm > 0.0) {
    g /= norm;
    // geometric mean of the decay ratios over the trailing half of the
    // trajectory; robust against rotating complex pairs
    std::vector<double> cum_log{0.0};
    double est_prev = -1.0;
    for (int n = 1; n <= 3000; ++n) {
      ++sub_iters;
      g = A * g;
      g -= z.dot(g) * h;
      norm = op.full_norm(g);
      if (!(norm > 1e-250)) {
        subdominant = 0.0;
        break;
      }
      g /= norm;
      cum_log.push_back(cum_log.back() + std::log(norm));
      if (n >= 32 && n % 16 == 0) {
        const int half = n / 2;
        const double est =
            std::exp((cum_log[n] - cum_log[half]) / (n - half));
        subdominant = est;
        if (est_prev >= 0.0 &&
            std::abs(est - est_prev) <= 1e-4 * std::max(est, 1e-30))
          break;
        est_prev = est;
      }
    }
  }

  SpectralData sd;
  sd.lambda = lambda;
  sd.h = op.to_grid_function(h);
  std::vector<double> zw(z.data(), z.data() + m);
  sd.nu = DiscreteMeasure(op.grid, zw);
  sd.subdominant_modulus = subdominant;
  sd.iterations = iter + sub_iters;
  sd.residual_h = res_h;
  sd.residual_nu = res_z;

  std::vector<double> mw(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) mw[static_cast<std::size_t>(i)] = h[i] * z[i];
  sd.mu = DiscreteMeasure(op.grid, mw).normalized();
  return sd;
}

DiscreteMeasure rpf_measure(const SpectralData& sd) {
  for (double v : sd.h.values())
    if (!(v > 0.0))
      throw std::invalid_argument("rpf_measure: eigenfunction must be positive");
  std::vector<double> weights(sd.nu.size());
  for (std::size_t i = 0; i < sd.nu.size(); ++i)
    weights[i] = sd.h.values()[i] * sd.nu.weights()[i];
  return DiscreteMeasure(sd.nu.points(), std::move(weights)).normalized();
}

double invariance_residual(const MapSpec& map, const DiscreteMeasure& mu,
                           const std::vector<GridFunction>& tests) {
  const double tol = 1e-9 * std::max(1.0, map.b - map.a);
  for (double p : mu.points())
    if (p < map.a - tol || p > map.b + tol)
      throw std::domain_error("invariance_residual: support leaves the domain");

  double worst = 0.0;
  for (const GridFunction& f : tests) {
    double through = 0.0, direct = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const double x = std::clamp(mu.points()[i], map.a, map.b);
      through += mu.weights()[i] * f(map.forward(x));
      direct += mu.weights()[i] * f(x);
    }
    const double norm = compute_norm(f, SpaceTag::holder(1.0)).full_norm;
    if (!(norm > 0.0)) continue;
    worst = std::max(worst, std::abs(through - direct) / norm);
  }
  return worst;
}

LasotaYorkeReport lasota_yorke_check(const MapSpec& map, SpaceTag space,
                                     int samples, int m, std::uint64_t seed,
                                     double tol_disc) {
  LasotaYorkeReport report;
  report.space = space;
  report.tol_disc = tol_disc;
  report.samples = samples;
  report.seed = seed;
  report.grid_size = m;

  InterpKind interp;
  if (space.kind == SpaceTag::Kind::Holder) {
    if (!map.holder_class)
      throw std::invalid_argument(
          "lasota_yorke_check: map carries no Hoelder class");
    if (std::abs(map.holder_class->alpha - space.param) > 1e-12)
      throw std::invalid_argument(
          "lasota_yorke_check: alpha does not match the declared class");
    report.bound = map.holder_class->theta;
    interp = InterpKind::PiecewiseLinear;
  } else {
    if (!map.class_v)
      throw std::invalid_argument(
          "lasota_yorke_check: map is not of the monotone-branch class");
    report.bound = std::pow(static_cast<double>(map.k), -1.0 / space.param);
    interp = InterpKind::PiecewiseConstantLeft;
  }

  const std::vector<double> grid =
      GridFunction::uniform_grid(map.a, map.b, static_cast<std::size_t>(m));
  std::vector<std::vector<double>> images(
      static_cast<std::size_t>(map.k),
      std::vector<double>(grid.size()));
  for (int j = 0; j < map.k; ++j)
    for (std::size_t i = 0; i < grid.size(); ++i)
      images[static_cast<std::size_t>(j)][i] = map.branch(j, grid[i]);

  auto seminorm = [&](const GridFunction& f) {
    return space.kind == SpaceTag::Kind::Holder
               ? holder_seminorm(f, space.param)
               : bvp_seminorm(f, space.param);
  };

  std::mt19937_64 rng(seed);
  int guard = 0;
  while (report.used < samples && guard < 10 * samples + 10) {
    ++guard;
    std::vector<double> values(grid.size());
    for (double& v : values) v = uniform_in(rng, -1.0, 1.0);
    GridFunction f(grid, std::move(values), interp);
    const double sf = seminorm(f);
    if (sf <= 1e-12) continue;  // constant sample: degenerate, resample
    std::vector<double> lv(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double acc = 0.0;
      for (int j = 0; j < map.k; ++j)
        acc += f(images[static_cast<std::size_t>(j)][i]);
      lv[i] = acc / map.k;
    }
    GridFunction lf(grid, std::move(lv), interp);
    report.max_ratio = std::max(report.max_ratio, seminorm(lf) / sf);
    ++report.used;
  }
  report.pass = report.max_ratio <= report.bound + tol_disc;
  return report;
}

GapDecayReport gap_decay_check(const DiscretizedOperator& op,
                               const SpectralData& sd, double delta, int n_max,
                               int trials, std::uint64_t seed) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("gap_decay_check: delta must lie in (0,1)");
  GapDecayReport report;
  report.delta = delta;
  report.n_max = n_max;
  report.trials = trials;
  report.seed = seed;

  const int m = op.size();
  const Eigen::MatrixXd& A = op.matrix;
  Eigen::VectorXd h = Eigen::Map<const Eigen::VectorXd>(
      sd.h.values().data(), static_cast<int>(sd.h.values().size()));
  Eigen::VectorXd z = Eigen::Map<const Eigen::VectorXd>(
      sd.nu.weights().data(), static_cast<int>(sd.nu.size()));
  const double log_rate = std::log(sd.lambda) + std::log1p(-delta);

  std::mt19937_64 rng(seed);
  double worst_tail = 0.0;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd f(m);
    for (int i = 0; i < m; ++i) f[i] = uniform_in(rng, -1.0, 1.0);

    // zero-mean form: project onto ker(nu) and iterate; the operator
    // preserves ker(nu), so the per-step re-projection only removes
    // floating-point leakage into the leading mode
    Eigen::VectorXd g = f - z.dot(f) * h;
    const double denom = op.full_norm(g);
    if (!(denom > 1e-12)) continue;
    double log_scale = 0.0;
    double c_prev10 = 1.0, c_last = 1.0;
    for (int n = 1; n <= n_max; ++n) {
      g = A * g;
      g -= z.dot(g) * h;
      log_scale += log_rate;
      const double norm = op.full_norm(g);
      const double ratio =
          norm > 0.0 ? std::exp(std::log(norm) - log_scale - std::log(denom))
                     : 0.0;
      report.sup_ratio = std::max(report.sup_ratio, ratio);
      if (n == std::max(1, n_max - 10)) c_prev10 = ratio;
      if (n == n_max) c_last = ratio;
    }
    if (c_prev10 > 0.0 && n_max > 10)
      worst_tail = std::max(
          worst_tail, std::pow(c_last / c_prev10,
                               1.0 / std::min(10, n_max - 1)));

    // rank-one-split form: R^n f = A^n f - lambda^n nu(f) h on raw f
    const double norm_f = op.full_norm(f);
    const double nu_f = z.dot(f);
    Eigen::VectorXd w = f;
    double lambda_pow = 1.0;
    log_scale = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      w = A * w;
      lambda_pow *= sd.lambda;
      log_scale += log_rate;
      const Eigen::VectorXd r = w - lambda_pow * nu_f * h;
      const double norm = op.full_norm(r);
      const double ratio =
          norm > 0.0
              ? std::exp(std::log(norm) - log_scale - std::log(norm_f))
              : 0.0;
      report.sup_ratio_split = std::max(report.sup_ratio_split, ratio);
    }
  }
  report.tail_slope = worst_tail;
  report.diverging = worst_tail > 1.0 + 1e-6;
  report.pass = !report.diverging && std::isfinite(report.sup_ratio);
  return report;
}

std::vector<double> correlation_sequence(const DiscretizedOperator& op,
                                         const SpectralData& sd,
                                         const GridFunction& f,
                                         const GridFunction& g, int n_max) {
  if (f.xs() != op.grid || g.xs() != op.grid)
    throw std::domain_error(
        "correlation_sequence: functions must live on the operator grid");
  const int m = op.size();
  Eigen::VectorXd fh = Eigen::Map<const Eigen::VectorXd>(
      f.values().data(), static_cast<int>(f.values().size()));
  Eigen::VectorXd z = Eigen::Map<const Eigen::VectorXd>(
      sd.nu.weights().data(), static_cast<int>(sd.nu.size()));

  double mu_f = 0.0, mu_g = 0.0;
  for (int i = 0; i < m; ++i) {
    mu_f += sd.mu.weights()[static_cast<std::size_t>(i)] * f.values()[i];
    mu_g += sd.mu.weights()[static_cast<std::size_t>(i)] * g.values()[i];
  }

  Eigen::VectorXd v(m);
  for (int i = 0; i < m; ++i)
    v[i] = g.values()[static_cast<std::size_t>(i)] *
           sd.h.values()[static_cast<std::size_t>(i)];

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  double lambda_pow = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      v = op.matrix * v;
      lambda_pow *= sd.lambda;
    }
    const double pairing = z.dot(fh.cwiseProduct(v)) / lambda_pow;
    out.push_back(std::abs(pairing - mu_f * mu_g));
  }
  return out;
}

}  // namespace gapcert
