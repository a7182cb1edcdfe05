#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "gapcert/errors.hpp"
#include "gapcert/interval_maps.hpp"

using namespace gapcert;

TEST_CASE("intermittent family: branches invert the forward map") {
  MapSpec pm = make_pomeau_manneville(1.0);
  CHECK(pm.k == 2);
  CHECK(pm.branch(0, 0.0) == 0.0);  // neutral fixed point

  // left inverse of x(1+2x) at 3/4: the positive root of 2y^2 + y - 3/4
  const double root = (std::sqrt(7.0) - 1.0) / 4.0;
  CHECK(pm.branch(0, 0.75) == doctest::Approx(root).epsilon(1e-12));
  CHECK(pm.forward(pm.branch(0, 0.75)) == doctest::Approx(0.75).epsilon(1e-13));

  // the left piece approaches 1 but never attains it; 1 is exceptional
  CHECK(pm.branch(0, 1.0) == doctest::Approx(0.5));
  CHECK(pm.is_exceptional(1.0));
  CHECK(pm.forward(0.5) == 0.0);

  MapSpec pm27 = make_pomeau_manneville(2.7);
  CHECK(pm27.branch(1, 0.0) == 0.5);  // right branch endpoint, any q

  CHECK(branch_consistency_residual(pm, 300) <= 1e-12);
  CHECK(branch_consistency_residual(pm27, 300) <= 1e-12);
  CHECK(branch_consistency_residual(make_pomeau_manneville(0.5), 300) <= 1e-12);

  CHECK_THROWS_AS(make_pomeau_manneville(0.0), std::domain_error);
  CHECK_THROWS_AS(make_pomeau_manneville(-1.0), std::domain_error);
}

TEST_CASE("intermittent family: declared contraction per exponent") {
  CHECK(make_pomeau_manneville(1.0, 1.0).holder_class->theta ==
        doctest::Approx(0.75));
  CHECK(make_pomeau_manneville(1.0, 0.5).holder_class->theta ==
        doctest::Approx(0.5 + std::pow(2.0, -1.5)));
  // the declared factor does not depend on q
  CHECK(make_pomeau_manneville(0.3).holder_class->theta ==
        make_pomeau_manneville(9.0).holder_class->theta);
}

TEST_CASE("doubling variants carry the geometry from their definitions") {
  MapSpec tent = make_doubling(DoublingVariant::Tent);
  CHECK(tent.branch(1, 0.0) == 1.0);
  CHECK(tent.forward(0.25) == 0.5);
  CHECK(tent.exceptional_points.empty());
  CHECK(branch_consistency_residual(tent, 200) == 0.0);

  MapSpec interval = make_doubling(DoublingVariant::Interval);
  REQUIRE(interval.exceptional_points.size() == 1);
  CHECK(interval.exceptional_points[0] == 1.0);
  // x = 1: the left branch lands on 1/2, which maps to 0, not back to 1
  CHECK(interval.branch(0, 1.0) == 0.5);
  CHECK(interval.forward(0.5) == 0.0);
  CHECK(interval.branch(1, 1.0) == 1.0);
  CHECK(branch_consistency_residual(interval, 200) == 0.0);

  MapSpec circle = make_doubling(DoublingVariant::Circle);
  CHECK(circle.metric == MetricKind::Circle);
  CHECK(circle.diameter() == 0.5);
  // consistency holds in the wraparound metric, including the seam
  CHECK(branch_consistency_residual(circle, 200) <= 1e-15);
  CHECK(circle.distance(0.0, 1.0) == 0.0);
  CHECK(circle.distance(0.1, 0.9) == doctest::Approx(0.2));

  CHECK_THROWS_AS(doubling_variant_from_string("moebius"),
                  std::invalid_argument);
}

TEST_CASE("unimodal construction inverts both monotone pieces") {
  MapSpec tent = make_tent();
  CHECK(tent.class_v);
  CHECK(tent.branch(0, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(tent.branch(1, 0.5) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(branch_consistency_residual(tent, 200) <= 1e-12);

  MapSpec logistic = make_logistic();
  CHECK(logistic.class_v);
  CHECK(!logistic.holder_class.has_value());
  CHECK(logistic.branch(0, 1.0) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::abs(logistic.forward(logistic.branch(0, 1.0)) - 1.0) <= 1e-9);
  CHECK(branch_consistency_residual(logistic, 200) <= 1e-9);

  const TilingReport tent_tiles = class_v_tiling(tent);
  CHECK(tent_tiles.covers);
  CHECK(tent_tiles.max_overlap <= 1e-12);
  const TilingReport log_tiles = class_v_tiling(logistic);
  CHECK(log_tiles.covers);
  CHECK(log_tiles.max_overlap <= 1e-9);
  const TilingReport interval_tiles =
      class_v_tiling(make_doubling(DoublingVariant::Interval));
  CHECK(interval_tiles.covers);
  CHECK(interval_tiles.max_overlap <= 1e-12);
}

TEST_CASE("unimodal validation lists witness points") {
  // x^2 on [0, 1/2] tops out at 1/4, nowhere near onto [0,1]
  CHECK_THROWS_AS(
      make_unimodal(
          0.0, 1.0, 0.5, [](double x) { return x * x; },
          [](double x) { return 2.0 - 2.0 * x; }),
      validation_error);
  try {
    make_unimodal(
        0.0, 1.0, 0.5, [](double x) { return x * x; },
        [](double x) { return 2.0 - 2.0 * x; });
  } catch (const validation_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("rising") != std::string::npos);
    CHECK(msg.find("endpoint") != std::string::npos);
  }
  // non-monotone falling piece
  CHECK_THROWS_AS(
      make_unimodal(
          0.0, 1.0, 0.5, [](double x) { return 2.0 * x; },
          [](double x) { return 0.5 + 0.5 * std::cos(9.0 * x); }),
      validation_error);
  CHECK_THROWS_AS(
      make_unimodal(0.0, 1.0, 1.5, [](double x) { return x; },
                    [](double x) { return x; }),
      std::invalid_argument);
}

TEST_CASE("average backward contraction estimates stay below declarations") {
  MapSpec tent = make_doubling(DoublingVariant::Tent);
  const double tent_est = estimate_theta(tent, 1.0, 400);
  CHECK(tent_est == doctest::Approx(0.5).epsilon(1e-14));

  MapSpec pm = make_pomeau_manneville(1.0);
  const double pm_est = estimate_theta(pm, 1.0, 400);
  CHECK(pm_est <= 0.75 + 1e-9);
  CHECK(pm_est >= 0.6);  // pairs near the neutral point approach the bound

  for (double q : {0.5, 2.0}) {
    MapSpec map = make_pomeau_manneville(q);
    CHECK(estimate_theta(map, 1.0, 300) <=
          map.holder_class->theta + 1e-9);
  }

  // the wraparound variant needs the branch-matching permutation: the
  // identity matching blows up across the seam, the swapped one contracts
  MapSpec circle = make_doubling(DoublingVariant::Circle);
  CHECK(estimate_theta(circle, 1.0, 400) <= 0.5 + 1e-9);

  // prefix-stable sampling makes the estimate monotone in the pair budget
  const double coarse = estimate_theta(pm, 1.0, 60, 123);
  const double fine = estimate_theta(pm, 1.0, 600, 123);
  CHECK(coarse <= fine + 1e-15);

  CHECK_THROWS_AS(estimate_theta(pm, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(estimate_theta(pm, 1.5, 10), std::domain_error);
}

TEST_CASE("assignment minimum: dense solver matches brute force") {
  std::mt19937_64 rng(99);
  auto random_cost = [&](int k) {
    std::vector<std::vector<double>> c(k, std::vector<double>(k));
    for (auto& row : c)
      for (double& v : row) v = uniform01(rng);
    return c;
  };
  auto exhaustive = [](const std::vector<std::vector<double>>& c) {
    const int k = static_cast<int>(c.size());
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    double best = 1e300;
    do {
      double total = 0.0;
      for (int j = 0; j < k; ++j) total += c[j][sigma[j]];
      best = std::min(best, total);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best / k;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + trial % 6;
    auto c = random_cost(k);
    CHECK(min_assignment_mean(c) == doctest::Approx(exhaustive(c)).epsilon(1e-12));
  }
  // k = 9 exercises the dense assignment path against brute force
  for (int trial = 0; trial < 3; ++trial) {
    auto c = random_cost(9);
    CHECK(min_assignment_mean(c) == doctest::Approx(exhaustive(c)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(min_assignment_mean({}), std::invalid_argument);
}

TEST_CASE("map spec guards its inputs") {
  MapSpec pm = make_pomeau_manneville(1.0);
  CHECK_THROWS_AS(pm.branch(2, 0.5), std::domain_error);
  CHECK_THROWS_AS(pm.branch(0, 1.5), std::domain_error);
  CHECK_THROWS_AS(pm.branch(0, -0.5), std::domain_error);
}
