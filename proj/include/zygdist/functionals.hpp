#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zygdist/dyadic.hpp"
#include "zygdist/martingale.hpp"
#include "zygdist/sampled_function.hpp"

namespace zyg {

/// Point (x, h) of the upper halfplane, h > 0.
struct HalfplanePoint {
  double x;
  double h;
};

/// (f(x+h) - f(x)) / h.
double delta1(const SampledFunction& f, double x, double h, EvalOptions options = {});
/// (f(x+h) - 2 f(x) + f(x-h)) / h.
double delta2(const SampledFunction& f, double x, double h, EvalOptions options = {});
/// |delta2(f, x, h)| > eps.
bool in_A(const SampledFunction& f, double eps, double x, double h, EvalOptions options = {});

/// Max |delta2| over grid points x and grid steps h with x +- h in [0, 1].
/// A lower bound for the continuous seminorm, exact for grid-piecewise-linear f.
double zygmund_seminorm(const SampledFunction& f);
/// Max |delta2 f(I)| over dyadic I in [0,1) of generation <= N-1.
double dyadic_zygmund_seminorm(const SampledFunction& f);

/// (1/|I|) sum over box_lattice(I, depth) of weight * |delta2 f(x, h)|^2.
double strichartz_functional(const SampledFunction& f, const RealInterval& I, int depth);
/// Sup of strichartz_functional over dyadic I in [0,1) of generation < depth,
/// each box resolved down to cells of generation depth-1. Requires depth <= N.
double strichartz_profile_value(const SampledFunction& f, int depth);

/// Sup over dyadic I in [0,1) of generation < depth of the box density of
/// A(f, eps), each box resolved down to cells of generation depth-1.
/// Requires depth <= N.
double C_functional(const SampledFunction& f, double eps, int depth);

/// Sup over dyadic I in [0,1) of (1/|I|) sum |J| over J in D(I), I included,
/// of generation 1..depth with |dS(J)| > eps/2. Requires depth <= N.
double D_functional(const DyadicMartingale& S, double eps, int depth);
double D_functional(const SampledFunction& f, double eps, int depth);

/// Thresholds x depths table of a functional, with an estimated threshold.
struct ThresholdEstimate {
  bool conclusive = false;
  double eps = 0.0;
  double tau = 0.1;
  int reference_depth = 0;
  int top_depth = 0;
  std::string method;
};

struct DistanceProfile {
  std::string functional;
  std::vector<double> eps;
  std::vector<int> depths;
  /// values[i][j] belongs to eps[i] and depths[j].
  std::vector<std::vector<double>> values;
  ThresholdEstimate estimate;
};

/// Growth ratio value[top] / value[ref] of one profile row, with ref the
/// smallest listed depth >= top/2 below top; 0/0 counts as ratio 1.
double growth_ratio(const std::vector<int>& depths, const std::vector<double>& row);
/// True when growth_ratio <= 1 + tau.
bool profile_bounded(const std::vector<int>& depths, const std::vector<double>& row, double tau);

/// Smallest grid eps such that it and every larger grid eps have a bounded
/// row. Inconclusive when the largest eps is itself unbounded.
ThresholdEstimate estimate_threshold(const DistanceProfile& profile, double tau = 0.1);

/// Evaluates a functional over the eps x depth grid (parallel over cells).
DistanceProfile make_profile(const std::string& name, const std::vector<double>& eps,
                             const std::vector<int>& depths,
                             const std::function<double(double, int)>& value);

DistanceProfile D_profile(const SampledFunction& f, const std::vector<double>& eps, const std::vector<int>& depths);
DistanceProfile C_profile(const SampledFunction& f, const std::vector<double>& eps, const std::vector<int>& depths);

/// Default eps grid: scale * 2^{-10 + k/2}, k = 0..22, with scale the dyadic
/// seminorm (1 when it vanishes).
std::vector<double> auto_eps_grid(double scale);

/// (integral over the cone {|x - s| < t < 1} of chi_A(f,eps) ds dt / t^2)^{1/2},
/// sampled on dyadic t-layers [2^-j-1, 2^-j), j < depth, with one cell per
/// generation-j interval K evaluated at delta2 f(K). Cells outside [0,1) are
/// zero for compactly supported f and omitted otherwise. Requires depth <= N.
double cone_counting(const SampledFunction& f, double eps, double x, int depth);
/// Same lattice with |delta2 f(K)|^2 in place of the indicator.
double cone_square(const SampledFunction& f, double x, int depth);

/// Exact integral over t in [t0, t1) of |K cap (x - t, x + t)| / t^2 for K = [a, b).
double cone_cell_weight(double a, double b, double x, double t0, double t1);

/// (#{n <= N : |dS_n(x)| > eps})^{1/2} per leaf.
LeafField truncated_quadratic(const DyadicMartingale& S, double eps);

/// (sum |v|^p * cell volume)^{1/p}, 1 < p < infinity.
double lp_norm(const LeafField& field, double p);

}  // namespace zyg
