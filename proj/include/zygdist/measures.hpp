#pragma once

#include <cstdint>
#include <vector>

#include "zygdist/functionals.hpp"
#include "zygdist/martingale.hpp"

namespace zyg {

/// Signed masses on the finest dyadic cubes of [0,1)^d, row-major with axis 0
/// slowest. Mass inside a finest cube is spread uniformly; outside [0,1)^d it is zero.
class GridMeasure {
 public:
  GridMeasure(int dimension, int depth, std::vector<double> masses);

  static GridMeasure uniform(int dimension, int depth, double total = 1.0);
  static GridMeasure zero(int dimension, int depth);
  /// dnu = b dx with b the leaf field.
  static GridMeasure from_density(const LeafField& density);

  int dimension() const { return dimension_; }
  int depth() const { return depth_; }
  const std::vector<double>& masses() const { return masses_; }
  std::int64_t cells_per_axis() const { return std::int64_t{1} << depth_; }
  double total_mass() const;

  /// Mass of the box with corners lo, hi given in half-cell units (multiples
  /// of 2^{-N-1}); portions outside [0,1]^d carry no mass.
  double box_mass(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) const;

 private:
  double corner_sum(const std::vector<std::int64_t>& half_index) const;

  int dimension_;
  int depth_;
  std::vector<double> masses_;
  std::vector<double> prefix_;  // summed-area table on the (2^N + 1)^d grid corners
};

GridMeasure operator-(const GridMeasure& a, const GridMeasure& b);

/// Cube prod_i [k_i 2^-n, (k_i + 1) 2^-n) of the standard grid.
struct DyadicCube {
  int generation = 0;
  std::vector<std::int64_t> offset;

  DyadicCube parent() const;
  friend bool operator==(const DyadicCube&, const DyadicCube&) = default;
};

/// mu(Q(x, h)) / |Q(x, h)|, Q(x, h) the cube centred at x with side h. Corners
/// must be multiples of 2^{-N-1}, otherwise DomainError.
double density(const GridMeasure& mu, const std::vector<double>& x, double h);
/// density(x, h) - density(x, 2h).
double delta2_measure(const GridMeasure& mu, const std::vector<double>& x, double h);

/// Density of a dyadic cube of generation -1..N; generation -1 is [-1, 1)^d.
double density(const GridMeasure& mu, const DyadicCube& Q);
/// density(Q) - density(Q*). Generation 0..N.
double delta2_dyadic(const GridMeasure& mu, const DyadicCube& Q);
/// Max over children Q' of |density(Q') - density(Q)|. Generation 0..N-1.
double delta2_max(const GridMeasure& mu, const DyadicCube& Q);

/// S(Q) = density(Q) for every dyadic cube of generation 0..N.
DyadicMartingale density_martingale(const GridMeasure& mu);

enum class MeasureNormMode { ContinuousGrid, Dyadic };
/// Dyadic: max of delta2_max over cubes of generation 0..N-1. ContinuousGrid:
/// max |delta2_measure(x, h)| over half-grid centres x and steps h multiple of
/// 2^-N with Q(x, h) inside [0,1]^d; interior_only also keeps Q(x, 2h) inside.
double measure_zygmund_norm(const GridMeasure& mu, MeasureNormMode mode, bool interior_only = false);

/// Max over cubes Q of generation 0..depth of (1/|Q|) sum |R| over R in D(Q),
/// Q included, of generation 1..depth with delta2_max(R*) > eps. depth <= N.
double D_measure(const GridMeasure& mu, double eps, int depth);
/// Max over cubes Q of generation 0..depth of (1/|Q|) sum over cells K in Q of
/// generation gen(Q)..depth of |K| ln2 [|delta2_measure(centre K, side K)| > eps].
double C_measure(const GridMeasure& mu, double eps, int depth);
/// (1/|Q|) sum over the same cells of |K| ln2 |delta2_measure(centre K, side K)|^2.
double ibmo_measure_functional(const GridMeasure& nu, const DyadicCube& Q, int depth);

DistanceProfile D_measure_profile(const GridMeasure& mu, const std::vector<double>& eps, const std::vector<int>& depths);
DistanceProfile C_measure_profile(const GridMeasure& mu, const std::vector<double>& eps, const std::vector<int>& depths);

/// nu with dnu = b dx, b the leaves of the density martingale after keeping
/// the children jumps of every Q with delta2_max(mu, Q) > eps.
GridMeasure measure_truncate(const GridMeasure& mu, double eps);

}  // namespace zyg
