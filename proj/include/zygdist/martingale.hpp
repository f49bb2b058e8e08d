#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zygdist/dyadic.hpp"
#include "zygdist/sampled_function.hpp"

namespace zyg {

/// One real value per finest-level cube of [0,1)^d at depth N.
/// Index layout: sum_i k_i 2^{N(d-1-i)}, axis 0 slowest.
struct LeafField {
  int dimension = 1;
  int depth = 0;
  std::vector<double> values;

  double cell_volume() const;
};

/// Finite dyadic martingale on [0,1)^d with generations 0..N.
///
/// Values and jumps are stored level-major in flat arrays; within a level the
/// node index is sum_i k_i 2^{g(d-1-i)}. The jump of the root is zero.
/// Invariant: the value of every internal node is the mean of its 2^d children.
class DyadicMartingale {
 public:
  static constexpr int kMaxNodes = 1 << 27;

  /// From per-node values; checks the averaging identity to 1e-12 relative to
  /// the children's magnitudes. For d = 1 the two jumps of a sibling pair are
  /// stored as +-(S(left) - S(right))/2, so siblings have identical magnitudes.
  static DyadicMartingale from_values(int dimension, int depth, std::vector<double> values);
  /// From a root value and per-node jumps (level 0 entry ignored); values are
  /// rebuilt top-down and each sibling group must sum to zero (1e-12 relative).
  static DyadicMartingale from_jumps(int dimension, int depth, double root, std::vector<double> jumps);
  static DyadicMartingale zero(int dimension, int depth);

  int dimension() const { return dimension_; }
  int depth() const { return depth_; }
  std::size_t level_size(int g) const { return std::size_t{1} << (dimension_ * g); }
  std::size_t level_offset(int g) const;
  std::size_t node_count() const { return values_.size(); }

  double value(int g, std::size_t idx) const { return values_[level_offset(g) + idx]; }
  double jump(int g, std::size_t idx) const { return jumps_[level_offset(g) + idx]; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& jumps() const { return jumps_; }

  /// Index of the parent (generation g-1) of node idx at generation g >= 1.
  std::size_t parent(int g, std::size_t idx) const;
  /// Index at generation g+1 of child c in [0, 2^d) of node idx.
  std::size_t child(int g, std::size_t idx, std::size_t c) const;
  /// Node at generation g containing leaf idx.
  std::size_t ancestor_of_leaf(std::size_t leaf, int g) const;

  /// Leaf field S_N.
  LeafField leaves() const;
  /// Value S_n(x) for x in leaf cell `leaf`.
  double value_at_leaf(int n, std::size_t leaf) const { return value(n, ancestor_of_leaf(leaf, n)); }

 private:
  DyadicMartingale(int dimension, int depth);
  void check_shape() const;

  int dimension_;
  int depth_;
  std::vector<double> values_;
  std::vector<double> jumps_;
};

/// S(I) = (f(b) - f(a)) / (b - a) on every dyadic I = [a, b) of generation <= N.
DyadicMartingale average_growth(const SampledFunction& f);

/// (f(b) - 2 f(m) + f(a)) / ((b - a) / 2) for I = [a, b) in D^0 with generation <= N-1.
double second_difference_dyadic(const SampledFunction& f, const DyadicInterval& I);

/// max |dS(I)| over generations 1..N.
double star_norm(const DyadicMartingale& S);

/// sup over nodes I of ((1/|I|) sum_{J in D(I)} |dS(J)|^2 |J|)^{1/2}, J = I included.
double bmo_norm(const DyadicMartingale& S);
/// Square of bmo_norm, computed without a square root.
double bmo_norm_squared(const DyadicMartingale& S);

/// Per node I: sum_{J in D(I)} |dS(J)|^2 |J| with J = I included, level-major.
std::vector<double> carleson_sums(const DyadicMartingale& S);

/// (sum_{n=1}^{N} |dS_n(x)|^2)^{1/2} per leaf.
LeafField quadratic_characteristic(const DyadicMartingale& S);

/// max_{1<=n<=N} |S_n(x) - S_0(x)| per leaf.
LeafField maximal_function(const DyadicMartingale& S);

/// b(i 2^-N) = sum of S_N over leaves left of i, times 2^-N, so b(0) = 0.
SampledFunction integrate(const DyadicMartingale& S);

/// Both sides of the orthogonality identity at node (g, idx):
/// integral over I of |S_N - S(I)|^2 and sum over J strictly inside I of |dS(J)|^2 |J|.
struct ParsevalPair {
  double integral;
  double jump_sum;
};
ParsevalPair parseval_pair(const DyadicMartingale& S, int g, std::size_t idx);

}  // namespace zyg
