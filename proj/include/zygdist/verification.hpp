#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zygdist/dyadic.hpp"
#include "zygdist/martingale.hpp"
#include "zygdist/measures.hpp"
#include "zygdist/sampled_function.hpp"

namespace zyg {

/// Max of a sampled ratio at a coarse and a fine resolution.
struct RatioReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  /// Samples left after removing inadmissible snapped tuples, per resolution.
  std::size_t admissible_coarse = 0;
  std::size_t admissible_fine = 0;
  int coarse_depth = 0;
  int fine_depth = 0;
  double norm = 0.0;
  double max_ratio_coarse = 0.0;
  double max_ratio_fine = 0.0;
  /// max_ratio_fine / max_ratio_coarse, 1 when both vanish.
  double stability = 1.0;
  /// Human-readable witness of max_ratio_fine.
  std::string argmax;

  double max_ratio() const { return std::max(max_ratio_coarse, max_ratio_fine); }
};

/// |delta2 f(x, h) - delta2 f(t, h')| over its log bracket, for a function
/// sampled at depth N >= 4. Tuples are drawn once (log-uniform scales from the
/// unit 2^{-N/2}) and snapped to the grids of depth N/2 and N; the seminorm is
/// measured once at depth min(N, 10).
RatioReport verify_modulus_1d(const SampledFunction& f, std::size_t samples, std::uint64_t seed);
/// Restriction to h' = h.
RatioReport verify_equal_step(const SampledFunction& f, std::size_t samples, std::uint64_t seed);
/// Restriction to t = x.
RatioReport verify_equal_centre(const SampledFunction& f, std::size_t samples, std::uint64_t seed);
/// |delta1 f(x, h) - delta1 f(t, h)| / (||f||_* log(|x - t|/h + 1)), |x - t| > h/2.
RatioReport verify_first_diff(const SampledFunction& f, std::size_t samples, std::uint64_t seed);

/// Exhaustive max over dyadic I != J of generation <= depth of
/// |S(I) - S(J)| / (||f||_{*d} dist(I, J)). Requires depth <= min(6, N).
struct DyadicDistanceReport {
  int depth = 0;
  std::size_t pairs = 0;
  double norm = 0.0;
  double max_ratio = 0.0;
  DyadicInterval argmax_first;
  DyadicInterval argmax_second;
};
DyadicDistanceReport verify_dyadic_distance_bound(const SampledFunction& f, int depth);

/// Monte Carlo size of {alpha in [-R, R] : |P_alpha(I, I - |I|)| = 2^{k-N}}.
/// A row passes when estimate <= bound (1 + 3 standard_error / estimate).
struct PredecessorRow {
  int k = 0;
  std::size_t count = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  double bound = 0.0;
  bool pass = false;
};
struct PredecessorReport {
  RealInterval interval;
  Rational R;
  int N = 0;
  int M = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<PredecessorRow> rows;
  /// Sum of the row estimates over the requested k range.
  double total = 0.0;
  bool pass = false;
};
PredecessorReport verify_predecessor_measure(const RealInterval& I, const Rational& R, int k_min, int k_max,
                                             std::size_t samples, std::uint64_t seed);

/// ||S*||_p / ||<S>||_p per member; at p = 2 every ratio must lie in [1, 2].
struct BdgReport {
  double p = 2.0;
  std::vector<double> ratios;
  std::size_t skipped = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  bool pass = true;
};
BdgReport verify_bdg(const std::vector<DyadicMartingale>& ensemble, double p);

struct NamedFunction {
  std::string name;
  SampledFunction f;
};
struct NamedMeasure {
  std::string name;
  GridMeasure mu;
};
/// Bounded strichartz profile <=> C bounded for every eps <=> D bounded for every eps,
/// and per eps C bounded <=> D bounded.
struct ConsistencyRow {
  std::string name;
  bool strichartz_bounded = false;
  std::vector<bool> c_bounded;
  std::vector<bool> d_bounded;
  int mismatches = 0;
};
struct ConsistencyReport {
  std::vector<double> eps;
  std::vector<int> depths;
  double tau = 0.1;
  std::vector<ConsistencyRow> rows;
  int mismatches = 0;
};
ConsistencyReport verify_strichartz_consistency(const std::vector<NamedFunction>& suite, const std::vector<double>& eps,
                                                const std::vector<int>& depths, double tau = 0.1);

/// Measure modulus lemma: |delta2(x, h) - delta2(t, h')| over the bracket
/// ((h'-h)/h)(1 + log(h/(h'-h) + 1)) + (|x-t|/h) log(h/|x-t| + 1), |x-t| < h/2,
/// at depths N/2 (coarsened masses) and N. The norm is the continuous grid
/// norm of the measure coarsened to a depth whose brute force stays cheap.
RatioReport verify_measure_modulus(const GridMeasure& mu, std::size_t samples, std::uint64_t seed);

/// hat, x^2, Weierstrass (8 levels), random jumps (delta 1/2, intrinsic depth 8)
/// and lacunary (c = 1, r = 3) at the given depth.
std::vector<NamedFunction> lemma_function_suite(int depth, std::uint64_t seed);
/// Cascades with theta = 1/4 on the first depth/2 levels (d = 1 and d = 2) and a
/// single root split with theta = 1/2 (d = 1). The d = 2 member uses depth/2.
std::vector<NamedMeasure> lemma_measure_suite(int depth, std::uint64_t seed);
/// linear, hat, x^2 (all bounded) and random jumps with delta = 1/4.
std::vector<NamedFunction> consistency_suite(int depth, std::uint64_t seed);

}  // namespace zyg
