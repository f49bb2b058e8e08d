#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zygdist/dyadic.hpp"

namespace zyg {

struct EvalOptions {
  /// Linear interpolation between grid points instead of rejecting off-grid x.
  bool interpolate = false;
};

/// Values f(i 2^-N), i = 0..2^N, of a function on [0, 1].
///
/// A function with f(0) = f(1) = 0 is treated as compactly supported and is
/// extended by zero outside [0, 1]; any other function rejects such points.
class SampledFunction {
 public:
  static constexpr int kMaxDepth = 26;

  SampledFunction(int depth, std::vector<double> values);

  static SampledFunction from_callable(int depth, const std::function<double(double)>& f);
  static SampledFunction zero(int depth);

  int depth() const { return depth_; }
  std::int64_t cells() const { return std::int64_t{1} << depth_; }
  double cell_width() const;
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  bool compactly_supported() const { return values_.front() == 0.0 && values_.back() == 0.0; }

  /// f at grid index i; indices outside [0, 2^N] follow the support rule.
  double at_index(std::int64_t i) const;
  /// f at a real point, exactly on the grid unless interpolation is enabled.
  double at(double x, EvalOptions options = {}) const;
  double at(const Rational& x, EvalOptions options = {}) const;

  /// Grid index of x, or DomainError when x is not a grid point.
  std::int64_t grid_index(double x) const;
  std::int64_t grid_index(const Rational& x) const;

 private:
  int depth_;
  std::vector<double> values_;
};

}  // namespace zyg
