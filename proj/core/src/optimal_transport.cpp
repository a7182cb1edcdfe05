#include "gapcert/optimal_transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gapcert/errors.hpp"

namespace gapcert {

namespace {

inline double transport_cost(double x, double y, double alpha) {
  const double d = std::abs(x - y);
  return alpha == 1.0 ? d : std::pow(d, alpha);
}

void require_equal_mass(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                        double eps) {
  if (std::abs(mu.mass() - nu.mass()) > eps * std::max(1.0, mu.mass()))
    throw std::domain_error("transport: measures must have equal mass");
}

}  // namespace

double w1(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
          double eps_num) {
  require_equal_mass(mu, nu, eps_num);
  // integral of |F_mu - F_nu| over the merged breakpoints
  std::size_t i = 0, j = 0;
  double cum_mu = 0.0, cum_nu = 0.0;
  double integral = 0.0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  const auto& px = mu.points();
  const auto& py = nu.points();
  while (i < px.size() || j < py.size()) {
    double t;
    if (j >= py.size() || (i < px.size() && px[i] <= py[j]))
      t = px[i];
    else
      t = py[j];
    if (!std::isnan(prev)) integral += std::abs(cum_mu - cum_nu) * (t - prev);
    while (i < px.size() && px[i] == t) cum_mu += mu.weights()[i++];
    while (j < py.size() && py[j] == t) cum_nu += nu.weights()[j++];
    prev = t;
  }
  return integral;
}

TransportSolution solve_transport(const DiscreteMeasure& mu,
                                  const DiscreteMeasure& nu, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("solve_transport: alpha must lie in (0,1]");
  require_equal_mass(mu, nu, 1e-12);

  // compress zero-weight atoms
  std::vector<double> sx, sw, dx, dw;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu.weights()[i] > 0.0) {
      sx.push_back(mu.points()[i]);
      sw.push_back(mu.weights()[i]);
    }
  for (std::size_t j = 0; j < nu.size(); ++j)
    if (nu.weights()[j] > 0.0) {
      dx.push_back(nu.points()[j]);
      dw.push_back(nu.weights()[j]);
    }
  const int n = static_cast<int>(sx.size());
  const int m = static_cast<int>(dx.size());
  TransportSolution sol;
  if (n == 0 || m == 0) return sol;

  std::vector<std::vector<double>> cost(n, std::vector<double>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) cost[i][j] = transport_cost(sx[i], dx[j], alpha);

  // successive shortest augmenting paths with Johnson potentials;
  // node layout: supplies [0,n), demands [n, n+m)
  const int V = n + m;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> pot(V, 0.0);
  for (int j = 0; j < m; ++j) {
    double lo = kInf;
    for (int i = 0; i < n; ++i) lo = std::min(lo, cost[i][j]);
    pot[n + j] = lo;
  }
  std::vector<std::vector<double>> flow(n, std::vector<double>(m, 0.0));
  std::vector<double> rs = sw, rd = dw;  // remaining supply / demand
  const double total_mass = mu.mass();
  const double tol_mass = std::max(1e-15, 1e-12 * total_mass);

  std::vector<double> dist(V);
  std::vector<int> parent(V);
  std::vector<char> settled(V);

  const int max_phases = 10 * V + 100;
  for (;;) {
    bool supply_left = false;
    for (int i = 0; i < n; ++i)
      if (rs[i] > tol_mass) {
        supply_left = true;
        break;
      }
    if (!supply_left) break;
    if (sol.augmentations >= max_phases)
      throw convergence_error("solve_transport: phase budget exhausted", 0.0,
                              0.0, sol.augmentations);

    // multi-source Dijkstra from every supply with remaining capacity; this
    // keeps all nodes reachable, which the potential update relies on
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(settled.begin(), settled.end(), 0);
    for (int i = 0; i < n; ++i)
      if (rs[i] > tol_mass) dist[i] = 0.0;
    // dense Dijkstra over the bipartite residual graph
    for (int round = 0; round < V; ++round) {
      int u = -1;
      double best = kInf;
      for (int v = 0; v < V; ++v)
        if (!settled[v] && dist[v] < best) {
          best = dist[v];
          u = v;
        }
      if (u < 0) break;
      settled[u] = 1;
      if (u < n) {
        for (int j = 0; j < m; ++j) {
          const double rc =
              std::max(0.0, cost[u][j] + pot[u] - pot[n + j]);
          if (dist[u] + rc < dist[n + j]) {
            dist[n + j] = dist[u] + rc;
            parent[n + j] = u;
          }
        }
      } else {
        const int j = u - n;
        for (int i = 0; i < n; ++i) {
          if (flow[i][j] <= 0.0) continue;
          const double rc =
              std::max(0.0, pot[n + j] - pot[i] - cost[i][j]);
          if (dist[u] + rc < dist[i]) {
            dist[i] = dist[u] + rc;
            parent[i] = u;
          }
        }
      }
    }

    int target = -1;
    double best = kInf;
    for (int j = 0; j < m; ++j)
      if (rd[j] > tol_mass && dist[n + j] < best) {
        best = dist[n + j];
        target = n + j;
      }
    if (target < 0)
      throw convergence_error("solve_transport: no augmenting path", 0.0, 0.0,
                              sol.augmentations);

    const double dist_t = dist[target];
    for (int v = 0; v < V; ++v)
      if (dist[v] < kInf) pot[v] += std::min(dist[v], dist_t);

    // bottleneck along the path back to whichever supply roots the tree
    int root = target;
    double bottleneck = rd[target - n];
    for (int v = target; parent[v] >= 0; v = parent[v]) {
      const int p = parent[v];
      if (v < n) bottleneck = std::min(bottleneck, flow[v][p - n]);
      root = p;
    }
    bottleneck = std::min(bottleneck, rs[root]);
    for (int v = target; parent[v] >= 0; v = parent[v]) {
      const int p = parent[v];
      if (v >= n)
        flow[p][v - n] += bottleneck;  // forward supply -> demand
      else
        flow[v][p - n] -= bottleneck;  // backward: cancel flow
    }
    rs[root] -= bottleneck;
    rd[target - n] -= bottleneck;
    ++sol.augmentations;
  }

  double primal = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) primal += flow[i][j] * cost[i][j];
  double dual = 0.0;
  for (int i = 0; i < n; ++i) dual += sw[i] * (-pot[i]);
  for (int j = 0; j < m; ++j) dual += dw[j] * pot[n + j];
  sol.cost = primal;
  sol.dual_value = dual;
  sol.duality_gap = primal - dual;
  if (std::abs(sol.duality_gap) > 1e-9 * std::max(1.0, primal))
    throw convergence_error("solve_transport: duality gap above 1e-9",
                            primal, dual, sol.augmentations);
  return sol;
}

double w_alpha_lp(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                  double alpha) {
  if (mu.size() > 200 || nu.size() > 200)
    throw capability_error("w_alpha_lp: supports capped at 200 atoms");
  return solve_transport(mu, nu, alpha).cost;
}

DiscreteMeasure dual_pushforward(const MapSpec& map,
                                 const DiscreteMeasure& mu) {
  std::vector<double> points, weights;
  points.reserve(mu.size() * map.k);
  weights.reserve(mu.size() * map.k);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double w = mu.weights()[i] / map.k;
    for (int j = 0; j < map.k; ++j) {
      points.push_back(map.branch(j, mu.points()[i]));
      weights.push_back(w);
    }
  }
  return DiscreteMeasure(std::move(points), std::move(weights));
}

ContractionReport dual_contraction_check(const MapSpec& map, double alpha,
                                         int trials, std::uint64_t seed,
                                         int atoms, double eps_num) {
  if (!map.holder_class)
    throw std::invalid_argument(
        "dual_contraction_check: map carries no Hoelder class");
  if (std::abs(map.holder_class->alpha - alpha) > 1e-12)
    throw std::invalid_argument(
        "dual_contraction_check: alpha does not match the declared class");
  if (map.metric != MetricKind::Interval)
    throw capability_error(
        "dual_contraction_check: wraparound metrics are not supported");

  ContractionReport report;
  report.alpha = alpha;
  report.theta = map.holder_class->theta;
  report.trials = trials;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  const double floor =
      1e-6 * std::pow(map.diameter(), alpha);  // skip degenerate pairs
  auto random_probability = [&]() {
    const int count = 1 + static_cast<int>(uniform01(rng) * atoms);
    std::vector<double> pts(count), wts(count);
    for (int i = 0; i < count; ++i) {
      pts[i] = uniform_in(rng, map.a, map.b);
      wts[i] = 0.05 + uniform01(rng);
    }
    return DiscreteMeasure(std::move(pts), std::move(wts)).normalized();
  };

  int guard = 0;
  while (report.used < trials && guard < 20 * trials + 100) {
    ++guard;
    const DiscreteMeasure mu = random_probability();
    const DiscreteMeasure nu = random_probability();
    const double base = w_alpha_lp(mu, nu, alpha);
    if (base <= floor) continue;
    const double pushed =
        w_alpha_lp(dual_pushforward(map, mu), dual_pushforward(map, nu), alpha);
    report.max_ratio = std::max(report.max_ratio, pushed / base);
    ++report.used;
  }
  report.pass = report.max_ratio <= report.theta + eps_num;
  return report;
}

DualityReport kantorovich_duality_check(
    const DiscreteMeasure& mu, const DiscreteMeasure& nu, double alpha,
    const std::vector<GridFunction>& candidates, double eps_num) {
  DualityReport report;
  report.alpha = alpha;
  report.w_value = w_alpha_lp(mu, nu, alpha);

  std::vector<double> union_pts = mu.points();
  union_pts.insert(union_pts.end(), nu.points().begin(), nu.points().end());
  std::sort(union_pts.begin(), union_pts.end());
  union_pts.erase(std::unique(union_pts.begin(), union_pts.end()),
                  union_pts.end());

  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    const GridFunction& f = candidates[idx];
    // the seminorm that matters is the one over the points where f is used
    std::vector<double> fv(union_pts.size());
    for (std::size_t i = 0; i < union_pts.size(); ++i) fv[i] = f(union_pts[i]);
    double seminorm = 0.0;
    for (std::size_t i = 0; i < union_pts.size(); ++i)
      for (std::size_t j = i + 1; j < union_pts.size(); ++j)
        seminorm = std::max(seminorm,
                            std::abs(fv[j] - fv[i]) /
                                std::pow(union_pts[j] - union_pts[i], alpha));
    if (seminorm > 1.0 + eps_num) {
      report.rejected.push_back(static_cast<int>(idx));
      continue;
    }
    const double gap = std::abs(mu.integrate(f) - nu.integrate(f));
    report.max_gap = std::max(report.max_gap, gap);
    ++report.checked;
  }
  report.pass = report.max_gap <= report.w_value + eps_num;
  return report;
}

}  // namespace gapcert
