#include "zygdist/martingale.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zyg {

double LeafField::cell_volume() const { return std::ldexp(1.0, -dimension * depth); }

DyadicMartingale::DyadicMartingale(int dimension, int depth) : dimension_(dimension), depth_(depth) {
  if (dimension < 1 || dimension > 3) throw std::invalid_argument("DyadicMartingale: dimension must be 1..3");
  if (depth < 0) throw std::invalid_argument("DyadicMartingale: negative depth");
  if (level_offset(depth + 1) > static_cast<std::size_t>(kMaxNodes)) {
    throw std::invalid_argument("DyadicMartingale: tree too large for dimension " +
                                std::to_string(dimension) + " and depth " + std::to_string(depth));
  }
}

std::size_t DyadicMartingale::level_offset(int g) const {
  const std::size_t branching = std::size_t{1} << dimension_;
  return ((std::size_t{1} << (dimension_ * g)) - 1) / (branching - 1);
}

void DyadicMartingale::check_shape() const {
  if (values_.size() != level_offset(depth_ + 1) || jumps_.size() != values_.size()) {
    std::ostringstream msg;
    msg << "DyadicMartingale: expected " << level_offset(depth_ + 1) << " nodes for dimension "
        << dimension_ << " and depth " << depth_ << ", got " << values_.size();
    throw std::invalid_argument(msg.str());
  }
}

std::size_t DyadicMartingale::parent(int g, std::size_t idx) const {
  if (dimension_ == 1) return idx >> 1;
  const std::size_t mask = (std::size_t{1} << g) - 1;
  std::size_t out = 0;
  for (int i = 0; i < dimension_; ++i) {
    std::size_t k = (idx >> (g * (dimension_ - 1 - i))) & mask;
    out |= (k >> 1) << ((g - 1) * (dimension_ - 1 - i));
  }
  return out;
}

std::size_t DyadicMartingale::child(int g, std::size_t idx, std::size_t c) const {
  if (dimension_ == 1) return 2 * idx + c;
  const std::size_t mask = (std::size_t{1} << g) - 1;
  std::size_t out = 0;
  for (int i = 0; i < dimension_; ++i) {
    std::size_t k = (idx >> (g * (dimension_ - 1 - i))) & mask;
    std::size_t bit = (c >> (dimension_ - 1 - i)) & 1U;
    out |= (2 * k + bit) << ((g + 1) * (dimension_ - 1 - i));
  }
  return out;
}

std::size_t DyadicMartingale::ancestor_of_leaf(std::size_t leaf, int g) const {
  const int shift = depth_ - g;
  if (dimension_ == 1) return leaf >> shift;
  const std::size_t mask = (std::size_t{1} << depth_) - 1;
  std::size_t out = 0;
  for (int i = 0; i < dimension_; ++i) {
    std::size_t k = (leaf >> (depth_ * (dimension_ - 1 - i))) & mask;
    out |= (k >> shift) << (g * (dimension_ - 1 - i));
  }
  return out;
}

DyadicMartingale DyadicMartingale::from_values(int dimension, int depth, std::vector<double> values) {
  DyadicMartingale S(dimension, depth);
  S.values_ = std::move(values);
  S.jumps_.assign(S.values_.size(), 0.0);
  S.check_shape();
  const std::size_t branching = std::size_t{1} << dimension;
  for (int g = 0; g < depth; ++g) {
    const std::size_t base = S.level_offset(g);
    const std::size_t child_base = S.level_offset(g + 1);
    for (std::size_t idx = 0; idx < S.level_size(g); ++idx) {
      double sum = 0.0;
      double magnitude = 0.0;
      for (std::size_t c = 0; c < branching; ++c) {
        double v = S.values_[child_base + S.child(g, idx, c)];
        sum += v;
        magnitude += std::fabs(v);
      }
      const double mean = sum / static_cast<double>(branching);
      const double parent_value = S.values_[base + idx];
      if (!std::isfinite(parent_value) || std::fabs(parent_value - mean) > 1e-12 * magnitude) {
        std::ostringstream msg;
        msg << "DyadicMartingale: averaging identity violated at generation " << g << ", node " << idx
            << " (value " << parent_value << ", children mean " << mean << ")";
        throw std::invalid_argument(msg.str());
      }
      if (dimension == 1) {
        const double half = (S.values_[child_base + 2 * idx] - S.values_[child_base + 2 * idx + 1]) / 2.0;
        S.jumps_[child_base + 2 * idx] = half;
        S.jumps_[child_base + 2 * idx + 1] = -half;
      } else {
        for (std::size_t c = 0; c < branching; ++c) {
          const std::size_t ci = child_base + S.child(g, idx, c);
          S.jumps_[ci] = S.values_[ci] - parent_value;
        }
      }
    }
  }
  return S;
}

DyadicMartingale DyadicMartingale::from_jumps(int dimension, int depth, double root, std::vector<double> jumps) {
  DyadicMartingale S(dimension, depth);
  S.jumps_ = std::move(jumps);
  S.values_.assign(S.jumps_.size(), 0.0);
  S.check_shape();
  S.jumps_[0] = 0.0;
  S.values_[0] = root;
  const std::size_t branching = std::size_t{1} << dimension;
  for (int g = 0; g < depth; ++g) {
    const std::size_t base = S.level_offset(g);
    const std::size_t child_base = S.level_offset(g + 1);
    for (std::size_t idx = 0; idx < S.level_size(g); ++idx) {
      double sum = 0.0;
      double magnitude = 0.0;
      for (std::size_t c = 0; c < branching; ++c) {
        const std::size_t ci = child_base + S.child(g, idx, c);
        sum += S.jumps_[ci];
        magnitude += std::fabs(S.jumps_[ci]);
        S.values_[ci] = S.values_[base + idx] + S.jumps_[ci];
      }
      if (!std::isfinite(sum) || std::fabs(sum) > 1e-12 * magnitude) {
        std::ostringstream msg;
        msg << "DyadicMartingale: jumps of the children of generation-" << g << " node " << idx
            << " sum to " << sum << " instead of 0";
        throw std::invalid_argument(msg.str());
      }
    }
  }
  return S;
}

DyadicMartingale DyadicMartingale::zero(int dimension, int depth) {
  DyadicMartingale S(dimension, depth);
  S.values_.assign(S.level_offset(depth + 1), 0.0);
  S.jumps_.assign(S.values_.size(), 0.0);
  return S;
}

LeafField DyadicMartingale::leaves() const {
  const std::size_t base = level_offset(depth_);
  return LeafField{dimension_, depth_,
                   std::vector<double>(values_.begin() + static_cast<std::ptrdiff_t>(base), values_.end())};
}

DyadicMartingale average_growth(const SampledFunction& f) {
  const int N = f.depth();
  std::vector<double> values((std::size_t{1} << (N + 1)) - 1);
  std::size_t pos = 0;
  for (int g = 0; g <= N; ++g) {
    const std::size_t stride = std::size_t{1} << (N - g);
    for (std::size_t k = 0; k < (std::size_t{1} << g); ++k) {
      values[pos++] = std::ldexp(f[(k + 1) * stride] - f[k * stride], g);
    }
  }
  return DyadicMartingale::from_values(1, N, std::move(values));
}

double second_difference_dyadic(const SampledFunction& f, const DyadicInterval& I) {
  if (I.generation < 0 || I.generation > f.depth() - 1) {
    throw DomainError("second_difference_dyadic: generation " + std::to_string(I.generation) +
                      " outside [0, " + std::to_string(f.depth() - 1) + "]");
  }
  const std::int64_t stride = std::int64_t{1} << (f.depth() - I.generation);
  const std::int64_t a = I.offset * stride;
  const double half_width = std::ldexp(1.0, -I.generation - 1);
  return (f.at_index(a + stride) - 2.0 * f.at_index(a + stride / 2) + f.at_index(a)) / half_width;
}

double star_norm(const DyadicMartingale& S) {
  double m = 0.0;
  for (double j : S.jumps()) m = std::max(m, std::fabs(j));
  return m;
}

std::vector<double> carleson_sums(const DyadicMartingale& S) {
  const int N = S.depth();
  const int d = S.dimension();
  const std::size_t branching = std::size_t{1} << d;
  std::vector<double> acc(S.node_count(), 0.0);
  for (int g = N; g >= 0; --g) {
    const std::size_t base = S.level_offset(g);
    const double volume = std::ldexp(1.0, -d * g);
    for (std::size_t idx = 0; idx < S.level_size(g); ++idx) {
      double total = 0.0;
      if (g < N) {
        const std::size_t child_base = S.level_offset(g + 1);
        for (std::size_t c = 0; c < branching; ++c) total += acc[child_base + S.child(g, idx, c)];
      }
      const double j = S.jumps()[base + idx];
      acc[base + idx] = j * j * volume + total;
    }
  }
  return acc;
}

double bmo_norm(const DyadicMartingale& S) { return std::sqrt(bmo_norm_squared(S)); }

double bmo_norm_squared(const DyadicMartingale& S) {
  const auto acc = carleson_sums(S);
  double best = 0.0;
  for (int g = 0; g <= S.depth(); ++g) {
    const std::size_t base = S.level_offset(g);
    for (std::size_t idx = 0; idx < S.level_size(g); ++idx) {
      best = std::max(best, std::ldexp(acc[base + idx], S.dimension() * g));
    }
  }
  return best;
}

LeafField quadratic_characteristic(const DyadicMartingale& S) {
  const std::size_t leaves = S.level_size(S.depth());
  LeafField out{S.dimension(), S.depth(), std::vector<double>(leaves)};
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
    double sum = 0.0;
    for (int n = 1; n <= S.depth(); ++n) {
      const double j = S.jump(n, S.ancestor_of_leaf(leaf, n));
      sum += j * j;
    }
    out.values[leaf] = std::sqrt(sum);
  }
  return out;
}

LeafField maximal_function(const DyadicMartingale& S) {
  const std::size_t leaves = S.level_size(S.depth());
  LeafField out{S.dimension(), S.depth(), std::vector<double>(leaves)};
  const double root = S.value(0, 0);
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
    double m = 0.0;
    for (int n = 1; n <= S.depth(); ++n) m = std::max(m, std::fabs(S.value_at_leaf(n, leaf) - root));
    out.values[leaf] = m;
  }
  return out;
}

SampledFunction integrate(const DyadicMartingale& S) {
  if (S.dimension() != 1) throw std::invalid_argument("integrate: only one-dimensional martingales");
  if (S.depth() < 1) throw std::invalid_argument("integrate: depth must be >= 1");
  const int N = S.depth();
  std::vector<double> b((std::size_t{1} << N) + 1, 0.0);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) b[i + 1] = b[i] + std::ldexp(S.value(N, i), -N);
  return SampledFunction(N, std::move(b));
}

ParsevalPair parseval_pair(const DyadicMartingale& S, int g, std::size_t idx) {
  const int N = S.depth();
  const int d = S.dimension();
  const double center = S.value(g, idx);
  const double leaf_volume = std::ldexp(1.0, -d * N);
  ParsevalPair out{0.0, 0.0};
  // Nodes strictly below (g, idx): walk generations, collecting descendants.
  std::vector<std::size_t> frontier{idx};
  const std::size_t branching = std::size_t{1} << d;
  for (int n = g; n < N; ++n) {
    std::vector<std::size_t> next;
    next.reserve(frontier.size() * branching);
    const double volume = std::ldexp(1.0, -d * (n + 1));
    for (std::size_t node : frontier) {
      for (std::size_t c = 0; c < branching; ++c) {
        const std::size_t ci = S.child(n, node, c);
        const double j = S.jump(n + 1, ci);
        out.jump_sum += j * j * volume;
        next.push_back(ci);
      }
    }
    frontier = std::move(next);
  }
  if (g == N) frontier = {idx};
  for (std::size_t leaf : frontier) {
    const double diff = S.value(N, leaf) - center;
    out.integral += diff * diff * leaf_volume;
  }
  return out;
}

}  // namespace zyg
