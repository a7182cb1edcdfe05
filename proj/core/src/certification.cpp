#include "gapcert/certification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gapcert/regularity.hpp"

namespace gapcert {

double doeblin_fortet_gap(double theta, double D) {
  if (!(theta > 0.0 && theta < 1.0))
    throw std::domain_error("doeblin_fortet_gap: theta must lie in (0,1)");
  if (!(D > 0.0))
    throw std::domain_error("doeblin_fortet_gap: D must be positive");
  return (1.0 - theta) / (1.0 + D * theta);
}

double projection_norm_bound(double D) {
  if (!(D > 0.0))
    throw std::domain_error("projection_norm_bound: D must be positive");
  return (2.0 * D + 2.0) / (D + 2.0);
}

double perturbation_radius(double delta0, double delta, double tau0,
                           double pi_norm) {
  if (!(delta0 > 0.0 && delta0 < 1.0))
    throw std::domain_error("perturbation_radius: delta0 must lie in (0,1)");
  if (!(delta >= 0.0 && delta < delta0))
    throw std::domain_error("perturbation_radius: need 0 <= delta < delta0");
  if (!(tau0 >= 1.0))
    throw std::domain_error("perturbation_radius: tau0 must be >= 1");
  if (!(pi_norm >= 1.0))
    throw std::domain_error("perturbation_radius: pi_norm must be >= 1");
  return delta0 * (delta0 - delta) /
         (6.0 * (1.0 + delta0 - delta) * tau0 * pi_norm);
}

double certified_gap_size(double delta0, double epsilon, double tau0,
                          double pi_norm) {
  if (!(delta0 > 0.0 && delta0 < 1.0))
    throw std::domain_error("certified_gap_size: delta0 must lie in (0,1)");
  if (!(epsilon >= 0.0))
    throw std::domain_error("certified_gap_size: epsilon must be >= 0");
  if (!(tau0 >= 1.0))
    throw std::domain_error("certified_gap_size: tau0 must be >= 1");
  if (!(pi_norm >= 1.0))
    throw std::domain_error("certified_gap_size: pi_norm must be >= 1");
  if (epsilon == 0.0) return delta0;
  const double c = 6.0 * tau0 * pi_norm;
  const double radius0 = delta0 * delta0 / (c * (1.0 + delta0));
  if (epsilon >= radius0) return 0.0;  // not certifiable at this distance
  const double delta = (delta0 * delta0 - c * epsilon * (1.0 + delta0)) /
                       (delta0 - c * epsilon);
  return std::clamp(delta, 0.0, delta0);
}

namespace {

void check_threshold_consistency(double closed, double diam_factor,
                                 double theta) {
  // the closed form must coincide with the assembled pipeline
  const double delta0 = doeblin_fortet_gap(theta, 1.0);
  const double pi = projection_norm_bound(1.0);
  const double radius = perturbation_radius(delta0, 0.0, 1.0, pi);
  const double assembled = (2.0 / (3.0 * diam_factor)) * std::log1p(radius);
  if (std::abs(closed - assembled) > 1e-12 * std::max(1.0, std::abs(closed)))
    throw std::logic_error(
        "threshold: closed form disagrees with the assembled pipeline");
}

}  // namespace

double holder_threshold(double alpha, double theta, double diam) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("holder_threshold: alpha must lie in (0,1]");
  if (!(theta > 0.0 && theta < 1.0))
    throw std::domain_error("holder_threshold: theta must lie in (0,1)");
  if (!(diam > 0.0))
    throw std::domain_error("holder_threshold: diam must be positive");
  const double diam_factor = std::pow(diam, alpha);
  const double inner = (1.0 - theta) * (1.0 - theta) / (16.0 * (1.0 + theta));
  const double closed = (2.0 / (3.0 * diam_factor)) * std::log1p(inner);
  check_threshold_consistency(closed, diam_factor, theta);
  return closed;
}

double bvp_threshold(std::int64_t k, double p) {
  if (k < 2) throw std::domain_error("bvp_threshold: k must be >= 2");
  if (!(p >= 1.0)) throw std::domain_error("bvp_threshold: p must be >= 1");
  const double K = std::pow(static_cast<double>(k), 1.0 / p);
  const double inner = (K - 1.0) * (K - 1.0) / (16.0 * K * (K + 1.0));
  const double closed = (2.0 / 3.0) * std::log1p(inner);
  check_threshold_consistency(closed, 1.0, 1.0 / K);
  return closed;
}

double bvp_threshold_limit() { return (2.0 / 3.0) * std::log1p(1.0 / 16.0); }

Certificate certify(const MapSpec& map, SpaceTag space,
                    double phi_seminorm_bound) {
  if (!(phi_seminorm_bound >= 0.0))
    throw std::domain_error("certify: seminorm bound must be >= 0");

  Certificate cert;
  cert.space = space;
  cert.D = 1.0;
  cert.tau0 = 1.0;

  if (space.kind == SpaceTag::Kind::Holder) {
    if (!map.holder_class)
      throw std::invalid_argument(
          "certify: map carries no Hoelder class declaration");
    if (std::abs(map.holder_class->alpha - space.param) > 1e-12)
      throw std::invalid_argument(
          "certify: requested alpha does not match the declared class");
    cert.theta = map.holder_class->theta;
    cert.diam_factor = std::pow(map.diameter(), space.param);
    cert.threshold = holder_threshold(space.param, cert.theta, map.diameter());
  } else {
    if (!map.class_v)
      throw std::invalid_argument(
          "certify: map is not of the monotone-branch class");
    cert.theta = std::pow(static_cast<double>(map.k), -1.0 / space.param);
    cert.diam_factor = 1.0;
    cert.threshold = bvp_threshold(map.k, space.param);
  }

  cert.delta0 = doeblin_fortet_gap(cert.theta, cert.D);
  cert.pi_bound = projection_norm_bound(cert.D);
  cert.radius = perturbation_radius(cert.delta0, 0.0, cert.tau0, cert.pi_bound);
  cert.phi_seminorm = phi_seminorm_bound;
  cert.epsilon = exp_distance(1.5 * cert.diam_factor * phi_seminorm_bound);
  cert.certified_delta =
      certified_gap_size(cert.delta0, cert.epsilon, cert.tau0, cert.pi_bound);
  cert.certified = cert.certified_delta > 0.0;
  return cert;
}

}  // namespace gapcert
