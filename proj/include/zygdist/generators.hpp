#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zygdist/approximation.hpp"
#include "zygdist/martingale.hpp"
#include "zygdist/measures.hpp"
#include "zygdist/sampled_function.hpp"

namespace zyg {

/// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Engine for stream `index` of `seed`; sample streams never overlap.
std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t index);

SampledFunction linear_function(int depth, double slope = 1.0, double intercept = 0.0);
/// min(x, 1 - x).
SampledFunction hat_function(int depth);
/// x^2.
SampledFunction square_function(int depth);
/// sum_{n < levels} 2^-n cos(2 pi 2^n x).
SampledFunction weierstrass_function(int depth, int levels);
/// sum_k c r^-k sin(2 pi r^k x) over r^k <= 2^{depth-2}; r integer >= 2. Vanishes at 0 and 1;
/// samples are rounded to multiples of 2^-40.
SampledFunction lacunary_function(int depth, double c, int r);
/// integrate of random_jump_martingale: every dyadic second difference is +-2 delta.
SampledFunction random_jumps_function(int depth, double delta, std::uint64_t seed);
/// integrate of single_branch_martingale.
SampledFunction single_branch_function(int depth, double delta);

/// Root 0; below every node the children carry +-delta with a random sign.
DyadicMartingale random_jump_martingale(int depth, double delta, std::uint64_t seed);
/// Root 0; only the children of the leftmost node of each generation jump,
/// the left child by +delta and the right child by -delta.
DyadicMartingale single_branch_martingale(int depth, double delta);
/// Root and jumps are multiples of 1/64 with magnitude <= 1 (d = 1: antisymmetric
/// sibling pairs; d >= 2: children jumps summing to zero).
DyadicMartingale random_dyadic_martingale(int dimension, int depth, std::uint64_t seed);

/// Multiplicative cascade with unit total mass. At level n <= thetas.size()
/// every node sends factors (1 +- theta_n) to its children, half of them +theta
/// in random order (d = 1: a random sign per node); deeper levels split evenly.
GridMeasure cascade_measure(int dimension, int depth, const std::vector<double>& thetas, std::uint64_t seed);

/// Piecewise-linear interpolation onto a finer grid (exact for dyadic data).
SampledFunction refine(const SampledFunction& f, int depth);
/// Samples on a coarser grid.
SampledFunction restrict_to(const SampledFunction& f, int depth);
/// Aggregated masses on a coarser grid.
GridMeasure coarsen(const GridMeasure& mu, int depth);

/// Every member is hat / 2 (dyadic seminorm 1).
FunctionFamily hat_family(int depth);
/// Member for alpha is random_jumps_function(intrinsic_depth, 1/2) refined to
/// depth, seeded by the bucket floor(alpha 2^intrinsic_depth); seminorm 1.
FunctionFamily bucketed_jump_family(int depth, int intrinsic_depth, std::uint64_t seed);
/// Member for alpha is the leaf field of a root-0 martingale with jumps
/// +-1/sqrt(intrinsic_depth), repeated down to depth; bucketed like above.
FieldFamily haar_field_family(int depth, int intrinsic_depth, std::uint64_t seed);

}  // namespace zyg
