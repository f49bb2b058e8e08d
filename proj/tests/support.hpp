#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "zygdist/martingale.hpp"
#include "zygdist/rational.hpp"
#include "zygdist/sampled_function.hpp"

namespace zyg::test {

/// Hand-rolled generator for property tests; every case is reproducible from the seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  Rational dyadic(std::int64_t lo_num, std::int64_t hi_num, int n) { return Rational::dyadic(integer(lo_num, hi_num), n); }

  /// Values on the depth-N grid that are multiples of 2^-10, so slopes stay exact.
  SampledFunction grid_function(int depth, std::int64_t range = 64) {
    std::vector<double> v(static_cast<std::size_t>((1 << depth) + 1));
    for (double& x : v) x = std::ldexp(static_cast<double>(integer(-range, range)), -10);
    return SampledFunction(depth, std::move(v));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Reference second difference straight from the grid values.
inline double naive_delta2(const SampledFunction& f, std::int64_t i, std::int64_t k) {
  const double h = std::ldexp(static_cast<double>(k), -f.depth());
  return (f[static_cast<std::size_t>(i + k)] - 2.0 * f[static_cast<std::size_t>(i)] + f[static_cast<std::size_t>(i - k)]) / h;
}

}  // namespace zyg::test
