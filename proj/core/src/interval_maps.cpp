#include "gapcert/interval_maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gapcert/errors.hpp"

namespace gapcert {

double MapSpec::branch(int j, double x) const {
  if (j < 0 || j >= k) throw std::domain_error("MapSpec: branch index");
  const double tol = 1e-9 * std::max(1.0, std::abs(b - a));
  if (x < a - tol || x > b + tol)
    throw std::domain_error("MapSpec: point outside the domain");
  return branches[static_cast<std::size_t>(j)](std::clamp(x, a, b));
}

double MapSpec::distance(double x, double y) const {
  const double d = std::abs(x - y);
  if (metric == MetricKind::Interval) return d;
  const double period = b - a;
  return std::min(d, period - d);
}

double MapSpec::diameter() const {
  return metric == MetricKind::Interval ? b - a : (b - a) / 2.0;
}

bool MapSpec::is_exceptional(double x, double tol) const {
  for (double e : exceptional_points)
    if (distance(x, e) <= tol) return true;
  return false;
}

DoublingVariant doubling_variant_from_string(const std::string& name) {
  if (name == "circle") return DoublingVariant::Circle;
  if (name == "tent") return DoublingVariant::Tent;
  if (name == "interval") return DoublingVariant::Interval;
  throw std::invalid_argument("make_doubling: unknown variant '" + name + "'");
}

std::string to_string(DoublingVariant v) {
  switch (v) {
    case DoublingVariant::Circle: return "circle";
    case DoublingVariant::Tent: return "tent";
    case DoublingVariant::Interval: return "interval";
  }
  return "?";
}

namespace {

// Unique root of g on [lo, hi] with g(lo) <= 0 <= g(hi), g increasing.
// Bisection down to fp resolution, Newton polish when a derivative is given.
double solve_increasing(const std::function<double(double)>& g,
                        const std::function<double(double)>& dg, double lo,
                        double hi, double eps_root) {
  double flo = g(lo);
  if (flo > 0.0) return lo;
  double y = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double fy = g(y);
    if (std::abs(fy) <= 0.5 * eps_root) break;
    if (fy < 0.0)
      lo = y;
    else
      hi = y;
    double next = std::numeric_limits<double>::quiet_NaN();
    if (dg) {
      const double d = dg(y);
      if (d > 0.0) next = y - fy / d;
    }
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(y)))
      break;
    y = next;
  }
  return y;
}

}  // namespace

MapSpec make_pomeau_manneville(double q, double alpha, double eps_root) {
  if (!(q > 0.0))
    throw std::domain_error("make_pomeau_manneville: q must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("make_pomeau_manneville: alpha must lie in (0,1]");

  auto forward = [q](double x) {
    if (x < 0.5) return x * (1.0 + std::pow(2.0 * x, q));
    return 2.0 * x - 1.0;
  };
  auto left_value = [q](double y) { return y * (1.0 + std::pow(2.0 * y, q)); };
  auto left_slope = [q](double y) {
    return 1.0 + (q + 1.0) * std::pow(2.0 * y, q);
  };
  auto b1 = [left_value, left_slope, eps_root](double x) {
    x = std::clamp(x, 0.0, 1.0);
    if (x <= 0.0) return 0.0;
    // T(1) is unreached by the left piece; 1/2 is its continuity closure.
    if (x >= 1.0) return 0.5;
    auto g = [&](double y) { return left_value(y) - x; };
    return solve_increasing(g, left_slope, 0.0, 0.5, eps_root);
  };
  auto b2 = [](double x) { return (std::clamp(x, 0.0, 1.0) + 1.0) / 2.0; };

  MapSpec map;
  map.family = "pomeau_manneville";
  map.parameters = {{"q", q}, {"alpha", alpha}};
  map.a = 0.0;
  map.b = 1.0;
  map.k = 2;
  map.branches = {b1, b2};
  map.forward = forward;
  // one branch is 1/2-contracting, the other 1-contracting: average in d^alpha
  map.holder_class = HolderClass{alpha, 0.5 + std::pow(2.0, -(1.0 + alpha))};
  map.class_v = false;
  map.exceptional_points = {1.0};
  return map;
}

MapSpec make_doubling(DoublingVariant variant) {
  MapSpec map;
  map.a = 0.0;
  map.b = 1.0;
  map.k = 2;
  map.holder_class = HolderClass{1.0, 0.5};
  switch (variant) {
    case DoublingVariant::Tent:
      map.family = "doubling_tent";
      map.branches = {[](double x) { return x / 2.0; },
                      [](double x) { return 1.0 - x / 2.0; }};
      map.forward = [](double x) { return x <= 0.5 ? 2.0 * x : 2.0 - 2.0 * x; };
      map.class_v = true;
      break;
    case DoublingVariant::Interval:
      map.family = "doubling_interval";
      map.branches = {[](double x) { return x / 2.0; },
                      [](double x) { return x / 2.0 + 0.5; }};
      map.forward = [](double x) { return x < 0.5 ? 2.0 * x : 2.0 * x - 1.0; };
      map.class_v = true;
      map.exceptional_points = {1.0};  // T^{-1}(1) = {1}: x/2 misses it
      break;
    case DoublingVariant::Circle: {
      auto rep = [](double x) { return x >= 1.0 ? x - 1.0 : x; };
      map.family = "doubling_circle";
      map.branches = {[rep](double x) { return rep(x) / 2.0; },
                      [rep](double x) { return rep(x) / 2.0 + 0.5; }};
      map.forward = [rep](double x) {
        const double y = 2.0 * rep(x);
        return y >= 1.0 ? y - 1.0 : y;
      };
      map.metric = MetricKind::Circle;
      map.class_v = false;
      break;
    }
  }
  return map;
}

namespace {

struct MonotonePiece {
  std::function<double(double)> fn;
  double lo, hi;       // argument interval
  bool increasing;
};

// Inverse of a monotone piece by bisection; target clamped to the image.
double invert_piece(const MonotonePiece& piece, double target) {
  double lo = piece.lo, hi = piece.hi;
  auto value = [&](double z) { return piece.fn(z); };
  const double vlo = value(lo), vhi = value(hi);
  const double vmin = std::min(vlo, vhi), vmax = std::max(vlo, vhi);
  target = std::clamp(target, vmin, vmax);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(mid)))
      return mid;
    const double v = value(mid);
    const bool go_right = piece.increasing ? (v < target) : (v > target);
    if (go_right)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

void check_piece(const std::function<double(double)>& fn, double lo, double hi,
                 double target_lo, double target_hi, bool increasing,
                 const char* name, std::vector<std::string>& witnesses) {
  constexpr int kSample = 129;
  double prev = fn(lo);
  const double tol = 1e-9;
  auto record = [&](double x, double v, const char* what) {
    if (witnesses.size() >= 5) return;
    std::ostringstream os;
    os << name << " " << what << " at x=" << x << " (value " << v << ")";
    witnesses.push_back(os.str());
  };
  const double expected_lo = increasing ? target_lo : target_hi;
  const double expected_hi = increasing ? target_hi : target_lo;
  if (std::abs(prev - expected_lo) > tol) record(lo, prev, "misses endpoint");
  for (int i = 1; i < kSample; ++i) {
    const double x = lo + (hi - lo) * i / (kSample - 1);
    const double v = fn(x);
    if (increasing ? (v <= prev) : (v >= prev))
      record(x, v, increasing ? "not increasing" : "not decreasing");
    prev = v;
  }
  if (std::abs(prev - expected_hi) > tol) record(hi, prev, "misses endpoint");
}

}  // namespace

MapSpec make_unimodal(double a, double b, double c,
                      std::function<double(double)> rising,
                      std::function<double(double)> falling, double eps_root) {
  if (!(a < c && c < b))
    throw std::invalid_argument("make_unimodal: need a < c < b");

  std::vector<std::string> witnesses;
  check_piece(rising, a, c, a, b, true, "rising", witnesses);
  check_piece(falling, c, b, a, b, false, "falling", witnesses);
  if (!witnesses.empty()) {
    std::string msg = "make_unimodal: validation failed:";
    for (const auto& w : witnesses) msg += "\n  " + w;
    throw validation_error(msg);
  }

  MonotonePiece up{rising, a, c, true};
  MonotonePiece down{falling, c, b, false};

  MapSpec map;
  map.family = "unimodal";
  map.parameters = {{"c", c}};
  map.a = a;
  map.b = b;
  map.k = 2;
  map.branches = {[up](double y) { return invert_piece(up, y); },
                  [down](double y) { return invert_piece(down, y); }};
  map.forward = [rising, falling, c](double x) {
    return x <= c ? rising(x) : falling(x);
  };
  map.class_v = true;
  (void)eps_root;
  return map;
}

MapSpec make_tent() {
  MapSpec map = make_unimodal(
      0.0, 1.0, 0.5, [](double x) { return 2.0 * x; },
      [](double x) { return 2.0 - 2.0 * x; });
  map.family = "tent";
  map.parameters.clear();
  // closed-form inverse branches; both are 1/2-Lipschitz
  map.branches = {[](double y) { return y / 2.0; },
                  [](double y) { return 1.0 - y / 2.0; }};
  map.holder_class = HolderClass{1.0, 0.5};
  return map;
}

MapSpec make_logistic() {
  auto logistic = [](double x) { return 4.0 * x * (1.0 - x); };
  MapSpec map = make_unimodal(0.0, 1.0, 0.5, logistic, logistic);
  map.family = "logistic";
  map.parameters.clear();
  return map;
}

namespace {

double brute_force_assignment_mean(const std::vector<std::vector<double>>& c) {
  const int k = static_cast<int>(c.size());
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (int j = 0; j < k; ++j) total += c[j][sigma[j]];
    best = std::min(best, total);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best / k;
}

// O(k^3) assignment with potentials (Kuhn-Munkres, dense form).
double hungarian_assignment_mean(const std::vector<std::vector<double>>& c) {
  const int n = static_cast<int>(c.size());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      double delta = kInf;
      int j1 = -1;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = c[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j) total += c[match[j] - 1][j - 1];
  return total / n;
}

}  // namespace

double min_assignment_mean(const std::vector<std::vector<double>>& cost) {
  const std::size_t k = cost.size();
  if (k == 0) throw std::invalid_argument("min_assignment_mean: empty cost");
  for (const auto& row : cost)
    if (row.size() != k)
      throw std::invalid_argument("min_assignment_mean: non-square cost");
  if (k == 1) return cost[0][0];
  if (k <= 8) return brute_force_assignment_mean(cost);
  return hungarian_assignment_mean(cost);
}

double estimate_theta(const MapSpec& map, double alpha, int n_pairs,
                      std::uint64_t seed) {
  if (n_pairs < 1)
    throw std::invalid_argument("estimate_theta: n_pairs must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("estimate_theta: alpha must lie in (0,1]");

  const int k = map.k;
  std::vector<double> by(k), bz(k);
  std::vector<std::vector<double>> cost(k, std::vector<double>(k, 0.0));

  auto pair_ratio = [&](double y, double z) {
    for (int j = 0; j < k; ++j) {
      by[j] = map.branch(j, y);
      bz[j] = map.branch(j, z);
    }
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        cost[j][l] = std::pow(map.distance(by[j], bz[l]), alpha);
    return min_assignment_mean(cost) / std::pow(map.distance(y, z), alpha);
  };

  double best = 0.0;
  int taken = 0;

  // deterministic sweep first, then seeded uniform pairs; the stream is a
  // prefix-stable function of the seed, so larger n_pairs only add pairs
  constexpr int kSweep = 33;
  for (int i = 0; i < kSweep && taken < n_pairs; ++i) {
    for (int j = i + 1; j < kSweep && taken < n_pairs; ++j) {
      const double y = map.a + (map.b - map.a) * i / (kSweep - 1);
      const double z = map.a + (map.b - map.a) * j / (kSweep - 1);
      if (map.distance(y, z) <= 0.0) continue;
      best = std::max(best, pair_ratio(y, z));
      ++taken;
    }
  }

  std::mt19937_64 rng(seed);
  int guard = 0;
  while (taken < n_pairs && guard < 100 * n_pairs + 1000) {
    ++guard;
    const double y = uniform_in(rng, map.a, map.b);
    const double z = uniform_in(rng, map.a, map.b);
    if (map.distance(y, z) <= 1e-12) continue;  // degenerate: resample
    best = std::max(best, pair_ratio(y, z));
    ++taken;
  }
  return best;
}

double branch_consistency_residual(const MapSpec& map, int n_samples,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  auto probe = [&](double x) {
    if (map.is_exceptional(x, 1e-9)) return;
    for (int j = 0; j < map.k; ++j) {
      const double y = map.branch(j, x);
      worst = std::max(worst, map.distance(map.forward(y), x));
    }
  };
  constexpr int kSweep = 101;
  for (int i = 0; i < kSweep; ++i)
    probe(map.a + (map.b - map.a) * i / (kSweep - 1));
  for (int i = 0; i < n_samples; ++i)
    probe(uniform_in(rng, map.a, map.b));
  return worst;
}

TilingReport class_v_tiling(const MapSpec& map) {
  TilingReport report;
  std::vector<std::pair<double, double>> images;
  for (int j = 0; j < map.k; ++j) {
    const double u = map.branch(j, map.a);
    const double v = map.branch(j, map.b);
    images.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      const double overlap = std::min(images[i].second, images[j].second) -
                             std::max(images[i].first, images[j].first);
      report.max_overlap = std::max(report.max_overlap, overlap);
    }
  std::sort(images.begin(), images.end());
  double covered_to = map.a;
  for (const auto& [lo, hi] : images) {
    if (lo > covered_to)
      report.max_gap = std::max(report.max_gap, lo - covered_to);
    covered_to = std::max(covered_to, hi);
  }
  if (covered_to < map.b)
    report.max_gap = std::max(report.max_gap, map.b - covered_to);
  report.covers = report.max_gap <= 1e-9;
  return report;
}

}  // namespace gapcert
