#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zygdist/functionals.hpp"
#include "zygdist/martingale.hpp"
#include "zygdist/sampled_function.hpp"

namespace zyg {

/// Which jumps survive a truncation.
struct TruncationRule {
  enum class Mode {
    /// Keep dS(J) when |dS(J)| > threshold; threshold = eps/2 for the I(BMO) rule.
    Jump,
    /// Keep dS(I) when |dS(I)| > threshold; threshold = eps for the Sobolev rule.
    Sobolev,
    /// Keep all children jumps of Q when max_child |dS| over Q exceeds threshold.
    ParentMax,
  };

  double threshold;
  Mode mode;

  static TruncationRule ibmo(double eps) { return {eps / 2.0, Mode::Jump}; }
  static TruncationRule sobolev(double eps) { return {eps, Mode::Sobolev}; }
  static TruncationRule parent_max(double eps) { return {eps, Mode::ParentMax}; }
};

/// B with B(root) = S(root) and dB = dS on kept nodes, 0 elsewhere, rebuilt
/// top-down. For d = 1 the Jump and Sobolev rules act on sibling pairs through
/// their shared magnitude; unequal sibling magnitudes raise std::logic_error.
DyadicMartingale truncate_jumps(const DyadicMartingale& S, const TruncationRule& rule);

DyadicMartingale sobolev_truncate(const DyadicMartingale& S, double eps);

/// D profile of f plus, per eps, the dyadic distance to the truncated approximant.
struct DistanceReport {
  DistanceProfile profile;
  /// ||f - integrate(truncate_jumps(S, eps/2))||_{*d} per eps.
  std::vector<double> measured_distance;
  /// bmo_norm of the truncated martingale per eps.
  std::vector<double> approximant_bmo;
};
DistanceReport dyadic_distance_report(const SampledFunction& f, const std::vector<double>& eps,
                                      const std::vector<int>& depths, double tau = 0.1);

/// Midpoints alpha_j = -R + (j + 1/2) 2R/M of the alpha lattice, exactly.
/// Rejects R < 1 and lattices whose points are not multiples of 2^-depth.
std::vector<Rational> alpha_lattice(const Rational& R, std::int64_t M, int depth);

/// t_R(x) = (1/M) sum_j t^(alpha_j)(x + alpha_j) on the depth-N grid of [0,1];
/// every member lives on [0,1) and is zero elsewhere (the value at 1 is dropped).
/// M = 0 selects 2^N lattice points.
using FunctionFamily = std::function<SampledFunction(const Rational& alpha)>;
SampledFunction translation_average(const FunctionFamily& family, const Rational& R, std::int64_t M, int depth);

/// b_R over [0,1) from a family of leaf fields with mean zero and their
/// sliding-window BMO norm.
using FieldFamily = std::function<LeafField(const Rational& alpha)>;
struct AveragedField {
  LeafField field;
  double measured_bmo = 0.0;
};
AveragedField garnett_jones_average(const FieldFamily& family, const Rational& R, std::int64_t M, int depth);

/// Sup over grid-aligned windows of length 2^-g, g = 0..N, of the L^2
/// oscillation of a leaf field (windows need not be dyadic).
double sliding_bmo_norm(const LeafField& field);

/// f = b + t with b averaged over translated truncations.
struct Decomposition {
  SampledFunction b;
  SampledFunction t;
  double eps = 0.0;
  std::int64_t lattice_size = 0;
  /// Max over alpha of the dyadic seminorm of t^(alpha) on its window.
  double max_member_t_seminorm = 0.0;
  double measured_b_seminorm = 0.0;
  double measured_t_seminorm = 0.0;
};
/// Requires compact support. M = 0 selects 2^N lattice points.
Decomposition continuous_decompose(const SampledFunction& f, double eps, std::int64_t M = 0);

}  // namespace zyg
