#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "gapcert/errors.hpp"
#include "gapcert/regularity.hpp"
#include "gapcert/rng.hpp"

using namespace gapcert;

namespace {

GridFunction random_function(std::mt19937_64& rng, int n, double lo = 0.0,
                             double hi = 1.0,
                             InterpKind interp = InterpKind::PiecewiseLinear) {
  std::vector<double> xs{lo};
  for (int i = 1; i < n; ++i)
    xs.push_back(xs.back() + 1e-3 + uniform01(rng) * (hi - lo) / n);
  std::vector<double> vs(xs.size());
  for (double& v : vs) v = uniform_in(rng, -2.0, 2.0);
  return GridFunction(std::move(xs), std::move(vs), interp);
}

// definition-shaped pairwise maximum, used to cross-check the fast alpha = 1
// path in holder_seminorm
double pairwise_seminorm(const GridFunction& f, double alpha) {
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      best = std::max(best, std::abs(f.values()[j] - f.values()[i]) /
                                std::pow(f.xs()[j] - f.xs()[i], alpha));
  return best;
}

}  // namespace

TEST_CASE("grid function evaluation returns stored values at nodes") {
  GridFunction f({0.0, 0.25, 1.0}, {1.0, -2.0, 5.0});
  CHECK(f(0.25) == -2.0);
  CHECK(f(1.0) == 5.0);
  CHECK(f(0.625) == doctest::Approx(1.5));  // midpoint of the second cell
  GridFunction g({0.0, 0.25, 1.0}, {1.0, -2.0, 5.0},
                 InterpKind::PiecewiseConstantLeft);
  CHECK(g(0.3) == -2.0);
  CHECK(g(0.999) == -2.0);
  CHECK(g(1.0) == 5.0);
  CHECK_THROWS_AS(GridFunction({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("Hoelder seminorm on simple functions") {
  auto grid = GridFunction::uniform_grid(0.0, 1.0, 33);
  GridFunction identity = GridFunction::sample([](double x) { return x; }, grid);
  CHECK(holder_seminorm(identity, 1.0) == doctest::Approx(1.0).epsilon(1e-14));

  GridFunction root({0.0, 0.25, 1.0}, {0.0, 0.5, 1.0});
  CHECK(holder_seminorm(root, 0.5) == doctest::Approx(1.0).epsilon(1e-14));

  GridFunction flat = GridFunction::constant(3.5, grid);
  CHECK(holder_seminorm(flat, 1.0) == 0.0);
  CHECK(holder_seminorm(flat, 0.5) == 0.0);

  GridFunction lone({0.5}, {1.0});
  CHECK_THROWS_AS(holder_seminorm(lone, 1.0), std::domain_error);
}

TEST_CASE("fast Lipschitz path equals the pairwise definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    GridFunction f = random_function(rng, 3 + trial % 40);
    CHECK(holder_seminorm(f, 1.0) ==
          doctest::Approx(pairwise_seminorm(f, 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("p-variation of the alternating and monotone samples") {
  auto grid = GridFunction::uniform_grid(0.0, 1.0, 4);
  GridFunction zigzag(grid, {0.0, 1.0, 0.0, 1.0});
  CHECK(bvp_seminorm(zigzag, 1.0) == doctest::Approx(3.0));
  CHECK(bvp_seminorm(zigzag, 2.0) == doctest::Approx(std::sqrt(3.0)));
  CHECK(bvp_bruteforce_oracle(zigzag, 2.0) ==
        doctest::Approx(std::sqrt(3.0)));

  GridFunction ramp(grid, {0.0, 0.2, 0.9, 1.0});
  for (double p : {1.0, 1.7, 2.0, 3.0}) {
    CHECK(bvp_seminorm(ramp, p) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(bvp_bruteforce_oracle(ramp, p) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }

  CHECK_THROWS_AS(bvp_seminorm(zigzag, 0.9), std::domain_error);
  GridFunction flat = GridFunction::constant(1.0, grid);
  CHECK(bvp_bruteforce_oracle(flat, 2.0) == 0.0);
}

TEST_CASE("dynamic program equals exhaustive enumeration") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 120; ++trial) {
    GridFunction f = random_function(rng, 4 + trial % 11);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      CHECK(bvp_seminorm(f, p) ==
            doctest::Approx(bvp_bruteforce_oracle(f, p)).epsilon(1e-12));
    }
  }
  GridFunction big = random_function(rng, 21);
  CHECK_THROWS_AS(bvp_bruteforce_oracle(big, 2.0), capability_error);
}

TEST_CASE("p = 1 oracle is the sum of adjacent increments") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    GridFunction f = random_function(rng, 5 + trial % 8);
    double adjacent = 0.0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      adjacent += std::abs(f.values()[i + 1] - f.values()[i]);
    CHECK(bvp_bruteforce_oracle(f, 1.0) ==
          doctest::Approx(adjacent).epsilon(1e-13));
  }
}

TEST_CASE("Hoelder functions have bounded p-variation for p = 1/alpha") {
  auto grid = GridFunction::uniform_grid(0.0, 1.0, 17);
  GridFunction identity = GridFunction::sample([](double x) { return x; }, grid);
  CHECK(holder_implies_bvp(identity, 1.0) == doctest::Approx(1.0));
  CHECK(bvp_seminorm(identity, 1.0) == doctest::Approx(1.0));

  GridFunction root = GridFunction::sample(
      [](double x) { return std::sqrt(x); }, grid);
  const double bound = holder_implies_bvp(root, 0.5);
  CHECK(bvp_seminorm(root, 2.0) <= bound + 1e-9);
  CHECK(bound == doctest::Approx(1.0).epsilon(1e-12));

  GridFunction flat = GridFunction::constant(2.0, grid);
  CHECK(holder_implies_bvp(flat, 0.5) == 0.0);

  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    GridFunction f = random_function(rng, 6 + trial % 10);
    for (double alpha : {0.4, 0.7, 1.0}) CHECK_NOTHROW(holder_implies_bvp(f, alpha));
  }
}

TEST_CASE("seminorms ignore constants and scale linearly") {
  // dyadic data keeps the shifted arithmetic exact, so equality is literal
  std::vector<double> xs, vs;
  std::mt19937_64 rng(55);
  for (int i = 0; i < 12; ++i) {
    xs.push_back(i / 16.0);
    vs.push_back(static_cast<double>(static_cast<int>(rng() % 64)) / 32.0);
  }
  GridFunction f(xs, vs);
  const double c = 13.0 / 8.0;
  for (double alpha : {0.5, 1.0}) {
    CHECK(holder_seminorm(shifted(f, c), alpha) == holder_seminorm(f, alpha));
    CHECK(holder_seminorm(scaled(f, 4.0), alpha) ==
          4.0 * holder_seminorm(f, alpha));
  }
  for (double p : {1.0, 2.0}) {
    CHECK(bvp_seminorm(shifted(f, c), p) == bvp_seminorm(f, p));
    CHECK(bvp_seminorm(scaled(f, 0.5), p) == 0.5 * bvp_seminorm(f, p));
  }
  // generic shifts agree to rounding
  GridFunction g = random_function(rng, 20);
  CHECK(holder_seminorm(shifted(g, 0.3), 1.0) ==
        doctest::Approx(holder_seminorm(g, 1.0)).epsilon(1e-12));
}

TEST_CASE("p-variation decreases in p and Hoelder grows under refinement") {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 30; ++trial) {
    GridFunction f = random_function(rng, 8 + trial % 12);
    double prev = bvp_seminorm(f, 1.0);
    for (double p : {1.5, 2.0, 3.0, 5.0}) {
      const double cur = bvp_seminorm(f, p);
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }

    // refine: insert a midpoint node with an interpolated value
    std::vector<double> xs = f.xs(), vs = f.values();
    const std::size_t cell = 1 + rng() % (xs.size() - 1);
    const double mid = 0.5 * (xs[cell - 1] + xs[cell]);
    xs.insert(xs.begin() + cell, mid);
    vs.insert(vs.begin() + cell, f(mid));
    GridFunction refined(xs, vs);
    for (double alpha : {0.5, 0.8, 1.0})
      CHECK(holder_seminorm(refined, alpha) >=
            holder_seminorm(f, alpha) - 1e-12);
  }
}

TEST_CASE("full norms form a Banach algebra on samples") {
  auto grid = GridFunction::uniform_grid(0.0, 1.0, 101);
  GridFunction one = GridFunction::constant(1.0, grid);
  auto [norm_one_sq, norm_prod] =
      banach_product_check(one, one, SpaceTag::holder(1.0));
  CHECK(norm_one_sq == doctest::Approx(1.0));
  CHECK(norm_prod == doctest::Approx(1.0));

  GridFunction identity = GridFunction::sample([](double x) { return x; }, grid);
  auto [norm_sq, norm_split] =
      banach_product_check(identity, identity, SpaceTag::holder(1.0));
  const double h = 1.0 / 100.0;
  CHECK(norm_split == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(norm_sq == doctest::Approx(3.0 - h).epsilon(1e-13));
  CHECK(norm_sq <= norm_split);

  auto [norm_neg, norm_split_neg] = banach_product_check(
      identity, scaled(identity, -1.0), SpaceTag::holder(1.0));
  CHECK(norm_neg == doctest::Approx(norm_sq));
  CHECK(norm_split_neg == doctest::Approx(norm_split));

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    GridFunction f = random_function(rng, 12);
    std::vector<double> vs(f.size());
    for (double& v : vs) v = uniform_in(rng, -1.5, 1.5);
    GridFunction g(f.xs(), vs);
    for (SpaceTag space : {SpaceTag::holder(0.6), SpaceTag::bvp(2.0)})
      CHECK_NOTHROW(banach_product_check(f, g, space));
  }

  GridFunction other = random_function(rng, 12);
  CHECK_THROWS_AS(banach_product_check(identity, other, SpaceTag::holder(1.0)),
                  std::domain_error);
}

TEST_CASE("midrange centering stays within 3/2 of the seminorm") {
  auto grid = GridFunction::uniform_grid(0.0, 1.0, 51);
  GridFunction flat = GridFunction::constant(7.0, grid);
  CHECK(centered_norm_excess(flat, SpaceTag::holder(1.0)) == 0.0);

  GridFunction identity = GridFunction::sample([](double x) { return x; }, grid);
  CHECK(centered_norm_excess(identity, SpaceTag::holder(1.0)) ==
        doctest::Approx(1.5).epsilon(1e-14));  // equality case of the bound

  GridFunction hat({0.0, 0.5, 1.0}, {0.0, 1.0, 0.0});
  CHECK(centered_norm_excess(hat, SpaceTag::bvp(1.0)) ==
        doctest::Approx(2.5).epsilon(1e-14));

  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 40; ++trial) {
    GridFunction f = random_function(rng, 10 + trial % 14);
    CHECK_NOTHROW(centered_norm_excess(f, SpaceTag::holder(0.7)));
    CHECK_NOTHROW(centered_norm_excess(f, SpaceTag::bvp(1.5)));
  }
}

TEST_CASE("operator distance bound from the centered norm") {
  CHECK(exp_distance(0.0) == 0.0);
  CHECK(exp_distance(std::log(97.0 / 96.0)) ==
        doctest::Approx(1.0 / 96.0).epsilon(1e-14));
  CHECK(exp_distance(0.001) ==
        doctest::Approx(0.001 + 0.001 * 0.001 / 2.0 + 1e-9 / 6.0)
            .epsilon(1e-9));
  CHECK_THROWS_AS(exp_distance(-0.1), std::domain_error);
}

TEST_CASE("space tags parse and print") {
  SpaceTag hol = SpaceTag::parse("hol:0.5");
  CHECK(hol.kind == SpaceTag::Kind::Holder);
  CHECK(hol.param == 0.5);
  SpaceTag bv = SpaceTag::parse("bvp:2");
  CHECK(bv.kind == SpaceTag::Kind::BVp);
  CHECK(bv.param == 2.0);
  CHECK(SpaceTag::parse(bv.str()).param == 2.0);
  CHECK_THROWS_AS(SpaceTag::parse("weird:1"), std::invalid_argument);
  CHECK_THROWS_AS(SpaceTag::holder(1.5), std::domain_error);
  CHECK_THROWS_AS(SpaceTag::bvp(0.5), std::domain_error);
}
