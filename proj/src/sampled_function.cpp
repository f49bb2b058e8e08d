#include "zygdist/sampled_function.hpp"

#include <cmath>
#include <sstream>

namespace zyg {

SampledFunction::SampledFunction(int depth, std::vector<double> values)
    : depth_(depth), values_(std::move(values)) {
  if (depth < 1 || depth > kMaxDepth) {
    throw std::invalid_argument("SampledFunction: depth " + std::to_string(depth) + " outside [1, " +
                                std::to_string(kMaxDepth) + "]");
  }
  const std::size_t expected = (std::size_t{1} << depth) + 1;
  if (values_.size() != expected) {
    std::ostringstream msg;
    msg << "SampledFunction: expected 2^" << depth << " + 1 = " << expected << " values, got "
        << values_.size();
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw std::invalid_argument("SampledFunction: value " + std::to_string(i) + " is not finite");
    }
  }
}

SampledFunction SampledFunction::from_callable(int depth, const std::function<double(double)>& f) {
  if (depth < 1 || depth > kMaxDepth) throw std::invalid_argument("SampledFunction: bad depth");
  std::vector<double> v((std::size_t{1} << depth) + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(std::ldexp(static_cast<double>(i), -depth));
  return SampledFunction(depth, std::move(v));
}

SampledFunction SampledFunction::zero(int depth) {
  return SampledFunction(depth, std::vector<double>((std::size_t{1} << depth) + 1, 0.0));
}

double SampledFunction::cell_width() const { return std::ldexp(1.0, -depth_); }

double SampledFunction::at_index(std::int64_t i) const {
  if (i >= 0 && i <= cells()) return values_[static_cast<std::size_t>(i)];
  if (compactly_supported()) return 0.0;
  throw DomainError("SampledFunction: grid index " + std::to_string(i) +
                    " outside [0, 1] for a function without compact support");
}

std::int64_t SampledFunction::grid_index(double x) const {
  double scaled = std::ldexp(x, depth_);
  double r = std::nearbyint(scaled);
  if (r != scaled || !std::isfinite(scaled)) {
    throw DomainError("SampledFunction: point " + std::to_string(x) + " is not on the depth-" +
                      std::to_string(depth_) + " grid");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t SampledFunction::grid_index(const Rational& x) const {
  Rational scaled = x * Rational::dyadic(1, -depth_);
  if (!scaled.is_integer()) {
    throw DomainError("SampledFunction: point " + x.to_string() + " is not on the depth-" +
                      std::to_string(depth_) + " grid");
  }
  return scaled.num();
}

double SampledFunction::at(double x, EvalOptions options) const {
  if (!options.interpolate) return at_index(grid_index(x));
  double scaled = std::ldexp(x, depth_);
  double base = std::floor(scaled);
  double frac = scaled - base;
  auto i = static_cast<std::int64_t>(base);
  if (frac == 0.0) return at_index(i);
  return (1.0 - frac) * at_index(i) + frac * at_index(i + 1);
}

double SampledFunction::at(const Rational& x, EvalOptions options) const {
  if (!options.interpolate) return at_index(grid_index(x));
  return at(x.to_double(), options);
}

}  // namespace zyg
