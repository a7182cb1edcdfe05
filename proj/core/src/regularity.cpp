#include "gapcert/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "gapcert/errors.hpp"

namespace gapcert {

SpaceTag SpaceTag::holder(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("SpaceTag: alpha must lie in (0,1]");
  return {Kind::Holder, alpha};
}

SpaceTag SpaceTag::bvp(double p) {
  if (!(p >= 1.0)) throw std::domain_error("SpaceTag: p must be >= 1");
  return {Kind::BVp, p};
}

SpaceTag SpaceTag::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("SpaceTag: expected hol:<alpha> or bvp:<p>");
  const std::string head = text.substr(0, colon);
  const double param = std::stod(text.substr(colon + 1));
  if (head == "hol") return holder(param);
  if (head == "bvp") return bvp(param);
  throw std::invalid_argument("SpaceTag: unknown space '" + head + "'");
}

std::string SpaceTag::str() const {
  const char* head = kind == Kind::Holder ? "hol:" : "bvp:";
  std::string s = std::to_string(param);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return head + s;
}

double holder_seminorm(const GridFunction& f, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("holder_seminorm: alpha must lie in (0,1]");
  const auto& xs = f.xs();
  const auto& v = f.values();
  const std::size_t n = xs.size();
  if (n < 2)
    throw std::domain_error("holder_seminorm: grid needs at least 2 points");
  double best = 0.0;
  if (alpha == 1.0) {
    // the pairwise maximum is attained on adjacent pairs (mediant inequality)
    for (std::size_t i = 0; i + 1 < n; ++i)
      best = std::max(best, std::abs(v[i + 1] - v[i]) / (xs[i + 1] - xs[i]));
    return best;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      best = std::max(best,
                      std::abs(v[j] - v[i]) / std::pow(xs[j] - xs[i], alpha));
  return best;
}

namespace {

inline double increment_power(double d, double p) {
  d = std::abs(d);
  if (p == 1.0) return d;
  if (p == 2.0) return d * d;
  return std::pow(d, p);
}

}  // namespace

double bvp_seminorm(const GridFunction& f, double p) {
  if (!(p >= 1.0)) throw std::domain_error("bvp_seminorm: p must be >= 1");
  const auto& v = f.values();
  const std::size_t n = v.size();
  if (n < 2) return 0.0;
  if (p == 1.0) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) sum += std::abs(v[i + 1] - v[i]);
    return sum;
  }
  // best[j]: largest sum of p-th powers over subsequences ending at j;
  // powers are accumulated and rooted once at the end.
  std::vector<double> best(n, 0.0);
  double global = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i)
      best[j] = std::max(best[j], best[i] + increment_power(v[j] - v[i], p));
    global = std::max(global, best[j]);
  }
  return std::pow(global, 1.0 / p);
}

double bvp_bruteforce_oracle(const GridFunction& f, double p) {
  if (!(p >= 1.0))
    throw std::domain_error("bvp_bruteforce_oracle: p must be >= 1");
  const auto& v = f.values();
  const std::size_t n = v.size();
  if (n > 20)
    throw capability_error(
        "bvp_bruteforce_oracle: exhaustive enumeration capped at 20 nodes");
  if (n < 2) return 0.0;
  double global = 0.0;
  const std::uint32_t full = 1u << n;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    double acc = 0.0;
    double prev = 0.0;
    bool have_prev = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      if (have_prev) acc += increment_power(v[i] - prev, p);
      prev = v[i];
      have_prev = true;
    }
    global = std::max(global, acc);
  }
  return std::pow(global, 1.0 / p);
}

double holder_implies_bvp(const GridFunction& f, double alpha,
                          double eps_num) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("holder_implies_bvp: alpha must lie in (0,1]");
  const double bound =
      holder_seminorm(f, alpha) * std::pow(f.span(), alpha);
  const double variation = bvp_seminorm(f, 1.0 / alpha);
  if (variation > bound + eps_num)
    throw std::logic_error(
        "holder_implies_bvp: p-variation exceeded the Hoelder bound");
  return bound;
}

RegularityNorm compute_norm(const GridFunction& f, SpaceTag space) {
  RegularityNorm norm;
  norm.space = space;
  norm.sup_norm = f.sup_norm();
  if (space.kind == SpaceTag::Kind::Holder) {
    norm.seminorm = holder_seminorm(f, space.param);
    norm.diam_factor = std::pow(f.span(), space.param);
  } else {
    norm.seminorm = bvp_seminorm(f, space.param);
    norm.diam_factor = 1.0;
  }
  norm.full_norm = norm.sup_norm + norm.diam_factor * norm.seminorm;
  return norm;
}

std::pair<double, double> banach_product_check(const GridFunction& f,
                                               const GridFunction& g,
                                               SpaceTag space,
                                               double eps_num) {
  if (!same_grid(f, g))
    throw std::domain_error("banach_product_check: grid mismatch");
  const double norm_fg = compute_norm(product(f, g), space).full_norm;
  const double norm_f = compute_norm(f, space).full_norm;
  const double norm_g = compute_norm(g, space).full_norm;
  if (norm_fg > norm_f * norm_g + eps_num)
    throw std::logic_error("banach_product_check: algebra inequality failed");
  return {norm_fg, norm_f * norm_g};
}

double centered_norm_excess(const GridFunction& phi, SpaceTag space,
                            double eps_num) {
  const double c = (phi.max_value() + phi.min_value()) / 2.0;
  const RegularityNorm base = compute_norm(phi, space);
  const double centered =
      compute_norm(shifted(phi, -c), space).full_norm;
  if (centered > 1.5 * base.diam_factor * base.seminorm + eps_num)
    throw std::logic_error(
        "centered_norm_excess: centering bound (3/2) diam^a seminorm failed");
  return centered;
}

double exp_distance(double centered_norm) {
  if (!(centered_norm >= 0.0))
    throw std::domain_error("exp_distance: input must be nonnegative");
  return std::expm1(centered_norm);
}

}  // namespace gapcert
