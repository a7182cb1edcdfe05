#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "gapcert/errors.hpp"
#include "gapcert/interval_maps.hpp"
#include "gapcert/optimal_transport.hpp"

using namespace gapcert;

namespace {

DiscreteMeasure random_probability(std::mt19937_64& rng, int max_atoms,
                                   double lo = 0.0, double hi = 1.0) {
  const int count = 1 + static_cast<int>(uniform01(rng) * max_atoms);
  std::vector<double> pts(count), wts(count);
  for (int i = 0; i < count; ++i) {
    pts[i] = uniform_in(rng, lo, hi);
    wts[i] = 0.05 + uniform01(rng);
  }
  return DiscreteMeasure(std::move(pts), std::move(wts)).normalized();
}

}  // namespace

TEST_CASE("discrete measures sort, merge and validate") {
  DiscreteMeasure mu({0.7, 0.1, 0.7}, {1.0, 2.0, 3.0});
  REQUIRE(mu.size() == 2);
  CHECK(mu.points()[0] == 0.1);
  CHECK(mu.weights()[1] == 4.0);  // duplicate atoms merged
  CHECK(mu.mass() == doctest::Approx(6.0));
  CHECK(mu.normalized().is_probability());
  CHECK_THROWS_AS(DiscreteMeasure({0.1}, {-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure({}, {}), std::invalid_argument);
}

TEST_CASE("closed-form distance on point masses and splits") {
  CHECK(w1(DiscreteMeasure::dirac(0.25), DiscreteMeasure::dirac(0.75)) ==
        doctest::Approx(0.5).epsilon(1e-15));

  DiscreteMeasure mu({0.0, 0.5}, {0.5, 0.5});
  CHECK(w1(mu, mu) == 0.0);

  DiscreteMeasure nu = DiscreteMeasure::dirac(0.25);
  CHECK(w1(mu, nu) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(w_alpha_lp(mu, nu, 1.0) == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(w1(mu, DiscreteMeasure({0.1}, {0.5})), std::domain_error);
}

TEST_CASE("transportation program agrees with the cumulative form at alpha 1") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 80; ++trial) {
    DiscreteMeasure mu = random_probability(rng, 50);
    DiscreteMeasure nu = random_probability(rng, 50);
    CHECK(w_alpha_lp(mu, nu, 1.0) ==
          doctest::Approx(w1(mu, nu)).epsilon(1e-9));
    CHECK(solve_transport(mu, nu, 1.0).duality_gap <= 1e-9);
  }
}

TEST_CASE("concave-cost optimum on two-atom measures") {
  CHECK(w_alpha_lp(DiscreteMeasure::dirac(0.2), DiscreteMeasure::dirac(0.9),
                   0.5) == doctest::Approx(std::sqrt(0.7)).epsilon(1e-12));

  // two extremal couplings: aligned and crossed; the optimum is their minimum
  DiscreteMeasure mu({0.0, 1.0}, {0.5, 0.5});
  DiscreteMeasure nu({0.1, 0.9}, {0.5, 0.5});
  const double aligned = 0.5 * std::pow(0.1, 0.5) + 0.5 * std::pow(0.1, 0.5);
  const double crossed = 0.5 * std::pow(0.9, 0.5) + 0.5 * std::pow(0.9, 0.5);
  CHECK(w_alpha_lp(mu, nu, 0.5) ==
        doctest::Approx(std::min(aligned, crossed)).epsilon(1e-12));

  std::vector<double> big(201), w(201, 1.0);
  for (int i = 0; i <= 200; ++i) big[i] = i / 200.0;
  CHECK_THROWS_AS(
      w_alpha_lp(DiscreteMeasure(big, w), DiscreteMeasure::dirac(0.5, 201.0),
                 0.5),
      capability_error);
}

TEST_CASE("distance axioms hold on random samples") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 25; ++trial) {
    DiscreteMeasure a = random_probability(rng, 12);
    DiscreteMeasure b = random_probability(rng, 12);
    DiscreteMeasure c = random_probability(rng, 12);
    for (double alpha : {0.5, 1.0}) {
      const double ab = w_alpha_lp(a, b, alpha);
      const double ba = w_alpha_lp(b, a, alpha);
      CHECK(ab == doctest::Approx(ba).epsilon(1e-10));
      CHECK(w_alpha_lp(a, a, alpha) <= 1e-12);
      CHECK(ab <= w_alpha_lp(a, c, alpha) + w_alpha_lp(c, b, alpha) + 1e-9);
      if (a.points() != b.points()) CHECK(ab > 0.0);
    }
  }
}

TEST_CASE("backward random walk preserves mass and contracts transport") {
  MapSpec tent = make_doubling(DoublingVariant::Tent);

  DiscreteMeasure at_zero = DiscreteMeasure::dirac(0.0);
  DiscreteMeasure at_one = DiscreteMeasure::dirac(1.0);
  DiscreteMeasure pushed_zero = dual_pushforward(tent, at_zero);
  DiscreteMeasure pushed_one = dual_pushforward(tent, at_one);
  REQUIRE(pushed_zero.size() == 2);  // atoms at 0 and 1
  REQUIRE(pushed_one.size() == 1);   // both branches land on 1/2
  CHECK(pushed_one.points()[0] == 0.5);
  CHECK(w1(pushed_zero, pushed_one) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(w1(at_zero, at_one) == 1.0);

  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    DiscreteMeasure mu = random_probability(rng, 30);
    CHECK(std::abs(dual_pushforward(tent, mu).mass() - 1.0) <= 1e-13);
  }

  ContractionReport tent_report = dual_contraction_check(tent, 1.0, 50);
  CHECK(tent_report.used == 50);
  CHECK(tent_report.pass);
  CHECK(tent_report.max_ratio <= 0.5 + 1e-9);

  ContractionReport pm_report =
      dual_contraction_check(make_pomeau_manneville(1.0), 1.0, 50);
  CHECK(pm_report.pass);
  CHECK(pm_report.max_ratio <= 0.75 + 1e-9);

  CHECK_THROWS_AS(dual_contraction_check(make_logistic(), 1.0, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      dual_contraction_check(make_pomeau_manneville(1.0, 0.5), 1.0, 5),
      std::invalid_argument);
  CHECK_THROWS_AS(
      dual_contraction_check(make_doubling(DoublingVariant::Circle), 1.0, 5),
      capability_error);
}

TEST_CASE("unit-seminorm candidates never beat the primal optimum") {
  DiscreteMeasure zero = DiscreteMeasure::dirac(0.0);
  DiscreteMeasure one = DiscreteMeasure::dirac(1.0);
  auto grid = GridFunction::uniform_grid(0.0, 1.0, 33);
  std::vector<GridFunction> candidates;
  candidates.push_back(
      GridFunction::sample([](double x) { return x; }, grid));
  candidates.push_back(GridFunction::constant(0.4, grid));
  candidates.push_back(
      GridFunction::sample([](double x) { return 2.0 * x; }, grid));

  DualityReport report = kantorovich_duality_check(zero, one, 1.0, candidates);
  CHECK(report.pass);
  CHECK(report.checked == 2);
  REQUIRE(report.rejected.size() == 1);
  CHECK(report.rejected[0] == 2);  // slope-2 candidate is out of class
  CHECK(report.w_value == doctest::Approx(1.0));
  CHECK(report.max_gap == doctest::Approx(1.0));  // duality is tight here

  // random 1-Lipschitz candidates against a 16-atom pair
  std::mt19937_64 rng(707);
  DiscreteMeasure mu = random_probability(rng, 16);
  DiscreteMeasure nu = random_probability(rng, 16);
  std::vector<GridFunction> random_candidates;
  for (int c = 0; c < 25; ++c) {
    std::vector<double> vs(grid.size());
    vs[0] = uniform_in(rng, -0.5, 0.5);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double step = grid[i] - grid[i - 1];
      vs[i] = vs[i - 1] + uniform_in(rng, -step, step);
    }
    random_candidates.emplace_back(grid, vs);
  }
  DualityReport random_report =
      kantorovich_duality_check(mu, nu, 1.0, random_candidates);
  CHECK(random_report.pass);
  CHECK(random_report.max_gap <= random_report.w_value + 1e-9);
}
