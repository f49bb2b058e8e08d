#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "support.hpp"
#include "zygdist/functionals.hpp"
#include "zygdist/generators.hpp"

using namespace zyg;

namespace {

double seminorm_oracle(const SampledFunction& f) {
  const std::int64_t n = f.cells();
  double best = 0.0;
  for (std::int64_t i = 0; i <= n; ++i) {
    for (std::int64_t k = 1; i - k >= 0 && i + k <= n; ++k) best = std::max(best, std::fabs(test::naive_delta2(f, i, k)));
  }
  return best;
}

double dyadic_seminorm_oracle(const SampledFunction& f) {
  double best = 0.0;
  for (int g = 0; g < f.depth(); ++g) {
    const std::int64_t half = std::int64_t{1} << (f.depth() - g - 1);
    for (std::int64_t k = 0; k < (std::int64_t{1} << g); ++k) best = std::max(best, std::fabs(test::naive_delta2(f, (2 * k + 1) * half, half)));
  }
  return best;
}

// (1/|I|) sum |J| over J in D(I) of generation 1..depth with |dS(J)| > eps/2, max over I.
double D_oracle(const DyadicMartingale& S, double eps, int depth) {
  double best = 0.0;
  for (int g = 0; g <= depth; ++g) {
    for (std::size_t i = 0; i < S.level_size(g); ++i) {
      double sum = 0.0;
      for (int h = std::max(g, 1); h <= depth; ++h) {
        const std::size_t span = std::size_t{1} << (h - g);
        for (std::size_t j = i * span; j < (i + 1) * span; ++j) {
          if (std::fabs(S.jump(h, j)) > eps / 2.0) sum += std::ldexp(1.0, -h);
        }
      }
      best = std::max(best, sum * std::ldexp(1.0, g));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("divided differences") {
  const SampledFunction lin = linear_function(8);
  const SampledFunction hat = hat_function(8);
  const SampledFunction sq = square_function(8);
  CHECK(delta1(lin, 0.25, 0.5) == 1.0);
  CHECK(delta1(hat, 0.0, 0.5) == 1.0);
  CHECK(delta1(SampledFunction::zero(8), 0.5, 0.25) == 0.0);
  CHECK(delta2(lin, 0.5, 0.25) == 0.0);
  CHECK(delta2(hat, 0.5, 0.25) == -2.0);
  test::Gen g(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t k = g.integer(1, 64);
    const std::int64_t i = g.integer(k, 256 - k);
    const double h = std::ldexp(static_cast<double>(k), -8);
    CHECK(delta2(sq, std::ldexp(static_cast<double>(i), -8), h) == doctest::Approx(2.0 * h).epsilon(1e-12));
  }
  CHECK(in_A(hat, 1.0, 0.5, 0.25));
  CHECK_FALSE(in_A(hat, 3.0, 0.5, 0.25));
  CHECK_FALSE(in_A(lin, 1e-9, 0.5, 0.25));
  CHECK_THROWS_AS(delta2(hat, 0.3, 0.1), DomainError);
  CHECK(delta2(hat, 0.3, 0.1, EvalOptions{true}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("seminorms of reference functions") {
  CHECK(zygmund_seminorm(hat_function(6)) == 2.0);
  CHECK(zygmund_seminorm(linear_function(6)) == 0.0);
  CHECK(zygmund_seminorm(square_function(6)) == 1.0);
  CHECK(dyadic_zygmund_seminorm(hat_function(6)) == 2.0);
  CHECK(dyadic_zygmund_seminorm(linear_function(6)) == 0.0);
  CHECK(dyadic_zygmund_seminorm(random_jumps_function(8, 0.375, 4)) == 0.75);
}

TEST_CASE("seminorms agree with brute force") {
  test::Gen g(32);
  for (int trial = 0; trial < 40; ++trial) {
    const SampledFunction f = g.grid_function(6);
    CHECK(zygmund_seminorm(f) == seminorm_oracle(f));
    CHECK(dyadic_zygmund_seminorm(f) == dyadic_seminorm_oracle(f));
    CHECK(dyadic_zygmund_seminorm(f) <= 2.0 * zygmund_seminorm(f));
  }
}

TEST_CASE("D functional") {
  const SampledFunction hat = hat_function(8);
  CHECK(D_functional(hat, 1.0, 8) == 1.0);
  CHECK(D_functional(hat, 3.0, 8) == 0.0);
  const double delta = 0.5;
  for (int N : {4, 6, 8}) {
    const SampledFunction f = random_jumps_function(N, delta, 5);
    CHECK(D_functional(f, 0.99, N) == N);
    CHECK(D_functional(f, 2 * delta, N) == 0.0);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DyadicMartingale S = random_dyadic_martingale(1, 7, seed);
    for (double eps : {0.05, 0.3, 0.9}) {
      for (int depth : {3, 7}) CHECK(D_functional(S, eps, depth) == D_oracle(S, eps, depth));
    }
  }
}

TEST_CASE("C functional and strichartz profile") {
  CHECK(C_functional(linear_function(8), 0.1, 8) == 0.0);
  CHECK(strichartz_profile_value(linear_function(8), 8) == 0.0);
  const SampledFunction hat = hat_function(12);
  const double s10 = strichartz_profile_value(hat, 10);
  const double s12 = strichartz_profile_value(hat, 12);
  CHECK(std::fabs(s12 - s10) <= 0.05 * s10);
  const double delta = 0.25;
  const SampledFunction f = random_jumps_function(10, delta, 9);
  const double fI = strichartz_functional(f, RealInterval(Rational(0), Rational(1)), 10);
  CHECK(fI == doctest::Approx(4 * delta * delta * std::log(2.0) * 10).epsilon(0.05));
  CHECK(C_functional(f, 0.4, 10) > C_functional(f, 0.4, 6));
}

TEST_CASE("threshold estimation") {
  const std::vector<int> depths{6, 8, 10, 12};
  const std::vector<double> eps{0.25, 0.5, 0.75, 1.0, 1.25};
  const DistanceProfile jumps = D_profile(random_jumps_function(12, 0.5, 1), eps, depths);
  const ThresholdEstimate e = estimate_threshold(jumps, 0.1);
  CHECK(e.conclusive);
  CHECK(e.eps == 1.0);
  CHECK(e.reference_depth == 6);
  CHECK(e.top_depth == 12);
  CHECK(estimate_threshold(D_profile(single_branch_function(12, 1.0), eps, depths)).eps == 0.25);
  CHECK(estimate_threshold(D_profile(linear_function(12), eps, depths)).eps == 0.25);
  CHECK_THROWS_AS(estimate_threshold(D_profile(linear_function(12), eps, {8, 12})), std::invalid_argument);
  CHECK(growth_ratio({4, 8}, {0.0, 0.0}) == 1.0);
  CHECK(profile_bounded({4, 8}, {1.0, 1.05}, 0.1));
  CHECK_FALSE(profile_bounded({4, 8}, {1.0, 2.0}, 0.1));
}

TEST_CASE("inconclusive estimate when the largest eps is unbounded") {
  const std::vector<int> depths{6, 8, 10};
  const DistanceProfile p = D_profile(random_jumps_function(10, 0.5, 1), {0.25, 0.5}, depths);
  CHECK_FALSE(estimate_threshold(p).conclusive);
}

TEST_CASE("auto eps grid") {
  const auto grid = auto_eps_grid(2.0);
  REQUIRE(grid.size() == 23);
  CHECK(grid.front() == std::ldexp(2.0, -10));
  CHECK(grid.back() == 4.0);
  CHECK(auto_eps_grid(0.0).front() == std::ldexp(1.0, -10));
}

TEST_CASE("cone functionals") {
  const SampledFunction lin = linear_function(10);
  CHECK(cone_counting(lin, 0.1, 0.5, 10) == 0.0);
  CHECK(cone_square(lin, 0.5, 10) == 0.0);
  const SampledFunction hat = hat_function(12);
  CHECK(cone_counting(hat, 1.0, 0.5, 8) > 0.0);
  CHECK(cone_counting(hat, 1.0, 0.5, 12) == doctest::Approx(cone_counting(hat, 1.0, 0.5, 8)).epsilon(0.05));
  const SampledFunction f = random_jumps_function(12, 0.5, 2);
  CHECK(cone_counting(f, 0.5, 0.3, 12) > 1.3 * cone_counting(f, 0.5, 0.3, 6));
  test::Gen g(33);
  for (int trial = 0; trial < 100; ++trial) {
    const SampledFunction h = g.grid_function(8);
    const double eps = g.real(0.01, 2.0);
    const double x = std::ldexp(static_cast<double>(g.integer(0, 256)), -8);
    const double c = cone_counting(h, eps, x, 8);
    const double s = cone_square(h, x, 8);
    CHECK(eps * eps * c * c <= s * s * (1.0 + 1e-12));
  }
  CHECK(cone_cell_weight(0.0, 1.0, 0.5, 0.25, 0.5) > 0.0);
  CHECK(cone_cell_weight(2.0, 3.0, 0.5, 0.25, 0.5) == 0.0);
}

TEST_CASE("truncated quadratic and lp norms") {
  const int N = 8;
  for (double v : truncated_quadratic(DyadicMartingale::zero(1, N), 0.1).values) CHECK(v == 0.0);
  for (double v : truncated_quadratic(random_jump_martingale(N, 0.5, 3), 0.25).values) CHECK(v == std::sqrt(N));
  const LeafField branch = truncated_quadratic(single_branch_martingale(N, 1.0), 0.5);
  CHECK(branch.values.front() == std::sqrt(N));
  CHECK(branch.values.back() == 1.0);
  CHECK(branch.values[1] == std::sqrt(N));
  CHECK(branch.values[2] == std::sqrt(N - 1));

  LeafField c{1, 4, std::vector<double>(16, 3.0)};
  CHECK(lp_norm(c, 2.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(lp_norm(LeafField{1, 4, std::vector<double>(16, 0.0)}, 3.0) == 0.0);
  LeafField half{1, 4, std::vector<double>(16, 0.0)};
  for (int i = 0; i < 8; ++i) half.values[static_cast<std::size_t>(i)] = 1.0;
  CHECK(lp_norm(half, 2.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(lp_norm(c, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lp_norm(c, std::numeric_limits<double>::infinity()), std::invalid_argument);
}
