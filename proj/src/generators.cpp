#include "zygdist/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zyg {

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

namespace {

void check_depth(int depth) {
  if (depth < 1 || depth > SampledFunction::kMaxDepth) {
    throw std::invalid_argument("generator depth must lie in [1, " + std::to_string(SampledFunction::kMaxDepth) + "]");
  }
}

// Fractional part of m i / 2^N, exact for the grid point i.
double grid_phase(std::uint64_t m, std::uint64_t i, int depth) {
  const std::uint64_t mask = (std::uint64_t{1} << depth) - 1;
  return std::ldexp(static_cast<double>((m * i) & mask), -depth);
}

}  // namespace

SampledFunction linear_function(int depth, double slope, double intercept) {
  check_depth(depth);
  return SampledFunction::from_callable(depth, [&](double x) { return slope * x + intercept; });
}

SampledFunction hat_function(int depth) {
  check_depth(depth);
  return SampledFunction::from_callable(depth, [](double x) { return std::min(x, 1.0 - x); });
}

SampledFunction square_function(int depth) {
  check_depth(depth);
  return SampledFunction::from_callable(depth, [](double x) { return x * x; });
}

SampledFunction weierstrass_function(int depth, int levels) {
  check_depth(depth);
  if (levels < 1 || levels > 62) throw std::invalid_argument("weierstrass: levels must lie in [1, 62]");
  std::vector<double> v((std::size_t{1} << depth) + 1, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    double sum = 0.0;
    for (int n = 0; n < levels; ++n) {
      sum += std::ldexp(std::cos(2.0 * std::numbers::pi * grid_phase(std::uint64_t{1} << n, i, depth)), -n);
    }
    v[i] = sum;
  }
  return SampledFunction(depth, std::move(v));
}

SampledFunction lacunary_function(int depth, double c, int r) {
  check_depth(depth);
  if (r < 2) throw std::invalid_argument("lacunary: ratio r must be an integer >= 2");
  if (!std::isfinite(c)) throw std::invalid_argument("lacunary: amplitude must be finite");
  std::vector<double> v((std::size_t{1} << depth) + 1, 0.0);
  const std::uint64_t limit = depth >= 2 ? (std::uint64_t{1} << (depth - 2)) : 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double sum = 0.0;
    double amplitude = c;
    for (std::uint64_t m = 1; m <= limit; m *= static_cast<std::uint64_t>(r)) {
      sum += amplitude * std::sin(2.0 * std::numbers::pi * grid_phase(m, i, depth));
      amplitude /= r;
    }
    v[i] = std::ldexp(std::nearbyint(std::ldexp(sum, 40)), -40);
  }
  return SampledFunction(depth, std::move(v));
}

DyadicMartingale random_jump_martingale(int depth, double delta, std::uint64_t seed) {
  std::mt19937_64 rng = stream_engine(seed, 0);
  DyadicMartingale shape = DyadicMartingale::zero(1, depth);
  std::vector<double> jumps(shape.node_count(), 0.0);
  for (int g = 1; g <= depth; ++g) {
    const std::size_t base = shape.level_offset(g);
    for (std::size_t idx = 0; idx < shape.level_size(g); idx += 2) {
      const double s = (rng() >> 63) ? delta : -delta;
      jumps[base + idx] = s;
      jumps[base + idx + 1] = -s;
    }
  }
  return DyadicMartingale::from_jumps(1, depth, 0.0, std::move(jumps));
}

DyadicMartingale single_branch_martingale(int depth, double delta) {
  DyadicMartingale shape = DyadicMartingale::zero(1, depth);
  std::vector<double> jumps(shape.node_count(), 0.0);
  for (int g = 1; g <= depth; ++g) {
    jumps[shape.level_offset(g)] = delta;
    jumps[shape.level_offset(g) + 1] = -delta;
  }
  return DyadicMartingale::from_jumps(1, depth, 0.0, std::move(jumps));
}

DyadicMartingale random_dyadic_martingale(int dimension, int depth, std::uint64_t seed) {
  std::mt19937_64 rng = stream_engine(seed, 0);
  auto draw = [&rng] { return static_cast<double>(static_cast<std::int64_t>(rng() % 129) - 64) / 64.0; };
  DyadicMartingale shape = DyadicMartingale::zero(dimension, depth);
  std::vector<double> jumps(shape.node_count(), 0.0);
  const std::size_t branching = std::size_t{1} << dimension;
  const double root = draw();
  for (int g = 0; g < depth; ++g) {
    const std::size_t child_base = shape.level_offset(g + 1);
    for (std::size_t idx = 0; idx < shape.level_size(g); ++idx) {
      std::vector<std::size_t> kids(branching);
      for (std::size_t c = 0; c < branching; ++c) kids[c] = child_base + shape.child(g, idx, c);
      // Fisher-Yates pairing so d >= 2 children get +-k in random positions.
      for (std::size_t c = branching - 1; c > 0; --c) std::swap(kids[c], kids[rng() % (c + 1)]);
      for (std::size_t c = 0; c < branching; c += 2) {
        const double k = draw();
        jumps[kids[c]] = k;
        jumps[kids[c + 1]] = -k;
      }
    }
  }
  return DyadicMartingale::from_jumps(dimension, depth, root, std::move(jumps));
}

SampledFunction random_jumps_function(int depth, double delta, std::uint64_t seed) {
  check_depth(depth);
  return integrate(random_jump_martingale(depth, delta, seed));
}

SampledFunction single_branch_function(int depth, double delta) {
  check_depth(depth);
  return integrate(single_branch_martingale(depth, delta));
}

GridMeasure cascade_measure(int dimension, int depth, const std::vector<double>& thetas, std::uint64_t seed) {
  for (double t : thetas) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("cascade: every theta must lie in [0, 1]");
  }
  std::mt19937_64 rng = stream_engine(seed, 0);
  DyadicMartingale shape = DyadicMartingale::zero(dimension, depth);
  std::vector<double> value(shape.node_count(), 0.0);
  value[0] = 1.0;
  const std::size_t branching = std::size_t{1} << dimension;
  std::vector<double> signs(branching);
  for (int g = 0; g < depth; ++g) {
    const double theta = static_cast<std::size_t>(g) < thetas.size() ? thetas[static_cast<std::size_t>(g)] : 0.0;
    const std::size_t base = shape.level_offset(g);
    const std::size_t child_base = shape.level_offset(g + 1);
    for (std::size_t idx = 0; idx < shape.level_size(g); ++idx) {
      for (std::size_t c = 0; c < branching; ++c) signs[c] = c < branching / 2 ? 1.0 : -1.0;
      if (theta > 0.0) {
        for (std::size_t c = branching - 1; c > 0; --c) std::swap(signs[c], signs[rng() % (c + 1)]);
      }
      for (std::size_t c = 0; c < branching; ++c) {
        value[child_base + shape.child(g, idx, c)] = value[base + idx] * (1.0 + signs[c] * theta);
      }
    }
  }
  const std::size_t leaves = shape.level_offset(depth);
  std::vector<double> masses(value.begin() + static_cast<std::ptrdiff_t>(leaves), value.end());
  for (double& m : masses) m = std::ldexp(m, -dimension * depth);
  return GridMeasure(dimension, depth, std::move(masses));
}

SampledFunction refine(const SampledFunction& f, int depth) {
  if (depth < f.depth()) throw std::invalid_argument("refine: target depth below source depth");
  check_depth(depth);
  const int s = depth - f.depth();
  const std::size_t step = std::size_t{1} << s;
  std::vector<double> v((std::size_t{1} << depth) + 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::size_t j = i >> s;
    const std::size_t r = i & (step - 1);
    v[i] = r == 0 ? f[j] : f[j] + std::ldexp((f[j + 1] - f[j]) * static_cast<double>(r), -s);
  }
  return SampledFunction(depth, std::move(v));
}

SampledFunction restrict_to(const SampledFunction& f, int depth) {
  if (depth > f.depth() || depth < 1) throw std::invalid_argument("restrict_to: target depth must lie in [1, source depth]");
  const std::size_t stride = std::size_t{1} << (f.depth() - depth);
  std::vector<double> v((std::size_t{1} << depth) + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i * stride];
  return SampledFunction(depth, std::move(v));
}

GridMeasure coarsen(const GridMeasure& mu, int depth) {
  if (depth > mu.depth() || depth < 0) throw std::invalid_argument("coarsen: target depth must lie in [0, source depth]");
  const int d = mu.dimension();
  const int shift = mu.depth() - depth;
  std::vector<double> masses(std::size_t{1} << (d * depth), 0.0);
  const std::size_t fine_mask = (std::size_t{1} << mu.depth()) - 1;
  for (std::size_t cell = 0; cell < mu.masses().size(); ++cell) {
    std::size_t target = 0;
    for (int i = 0; i < d; ++i) {
      const std::size_t k = (cell >> (mu.depth() * (d - 1 - i))) & fine_mask;
      target = (target << depth) | (k >> shift);
    }
    masses[target] += mu.masses()[cell];
  }
  return GridMeasure(d, depth, std::move(masses));
}

namespace {

std::uint64_t alpha_bucket(const Rational& alpha, int intrinsic_depth) {
  return static_cast<std::uint64_t>((alpha * Rational::dyadic(1, -intrinsic_depth)).floor());
}

}  // namespace

FunctionFamily hat_family(int depth) {
  std::vector<double> v = hat_function(depth).values();
  for (double& x : v) x /= 2.0;
  SampledFunction half(depth, std::move(v));
  return [half](const Rational&) { return half; };
}

FunctionFamily bucketed_jump_family(int depth, int intrinsic_depth, std::uint64_t seed) {
  if (intrinsic_depth > depth) throw std::invalid_argument("bucketed_jump_family: intrinsic depth exceeds depth");
  return [=](const Rational& alpha) {
    const std::uint64_t bucket = alpha_bucket(alpha, intrinsic_depth);
    const std::uint64_t member_seed = stream_engine(seed, bucket)();
    return refine(random_jumps_function(intrinsic_depth, 0.5, member_seed), depth);
  };
}

FieldFamily haar_field_family(int depth, int intrinsic_depth, std::uint64_t seed) {
  if (intrinsic_depth > depth || intrinsic_depth < 1) {
    throw std::invalid_argument("haar_field_family: intrinsic depth must lie in [1, depth]");
  }
  return [=](const Rational& alpha) {
    const std::uint64_t bucket = alpha_bucket(alpha, intrinsic_depth);
    const std::uint64_t member_seed = stream_engine(seed, bucket)();
    const DyadicMartingale S =
        random_jump_martingale(intrinsic_depth, 1.0 / std::sqrt(static_cast<double>(intrinsic_depth)), member_seed);
    const LeafField coarse = S.leaves();
    LeafField out{1, depth, std::vector<double>(std::size_t{1} << depth)};
    const int shift = depth - intrinsic_depth;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = coarse.values[i >> shift];
    return out;
  };
}

}  // namespace zyg
