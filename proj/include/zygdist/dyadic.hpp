#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zygdist/rational.hpp"

namespace zyg {

/// Evaluation outside the sampled domain or off the sampling grid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kMinGeneration = -60;
inline constexpr int kMaxGeneration = 60;

/// Translation t_n of generation n: zero for n >= 0, (4^m - 1)/3 with
/// m = (1 - n) / 2 (integer division) for n < 0.
Rational translation(int n);

/// Half-open interval [left, right) with exact endpoints, left < right.
struct RealInterval {
  Rational left;
  Rational right;

  RealInterval(Rational l, Rational r);
  Rational length() const { return right - left; }
  Rational midpoint() const { return (left + right) / Rational(2); }
  bool contains(const Rational& x) const { return left <= x && x < right; }
  bool contains(const RealInterval& other) const {
    return left <= other.left && other.right <= right;
  }
  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

/// The translated filtration D^alpha: J is in D^alpha iff J + alpha is in D^0.
struct Filtration {
  Rational shift;
  Filtration() = default;
  explicit Filtration(Rational alpha) : shift(alpha) {}
  Filtration inverse() const { return Filtration(-shift); }
  friend bool operator==(const Filtration&, const Filtration&) = default;
};

/// Label (n, k) of the n-th generation interval number k. The real interval
/// it denotes depends on the filtration it is read in.
struct DyadicInterval {
  int generation = 0;
  std::int64_t offset = 0;
  friend auto operator<=>(const DyadicInterval&, const DyadicInterval&) = default;
  std::string to_string() const;
};

/// Exact length 2^-n.
Rational length(const DyadicInterval& I);

RealInterval interval_of(int n, std::int64_t k, const Filtration& alpha = {});
RealInterval interval_of(const DyadicInterval& I, const Filtration& alpha = {});

/// The generation-n interval of D^alpha that contains x.
DyadicInterval locate(int n, const Rational& x, const Filtration& alpha = {});

/// Unique generation n-1 interval containing I (the same label in every D^alpha).
DyadicInterval predecessor(const DyadicInterval& I);
std::array<DyadicInterval, 2> children(const DyadicInterval& I);
/// Ancestor of I at a coarser generation g <= gen(I).
DyadicInterval ancestor(const DyadicInterval& I, int g);
bool is_descendant(const DyadicInterval& inner, const DyadicInterval& outer);

/// Minimal-length member of D^alpha that contains I.
DyadicInterval containing_dyadic(const RealInterval& I, const Filtration& alpha = {});

/// Maximal D^alpha intervals inside I, ordered by decreasing length and then
/// left to right. Generations finer than min_generation are not produced;
/// the uncovered length is reported as residual.
struct Covering {
  std::vector<DyadicInterval> intervals;
  Rational residual;
};
Covering covering_F(const RealInterval& I, const Filtration& alpha, int min_generation);

/// Coverings of I and of the adjacent interval I - |I| with position-wise equal
/// lengths. Both lists stop as soon as either truncated covering runs out.
struct PairedCovering {
  RealInterval adjacent;
  std::vector<DyadicInterval> first;
  std::vector<DyadicInterval> second;
};
PairedCovering paired_coverings(const RealInterval& I, const Filtration& alpha, int min_generation);

/// Smallest common ancestor of two labels. Labels share the tree structure of
/// every D^alpha, so alpha only fixes how the result is read.
DyadicInterval common_predecessor(const DyadicInterval& a, const DyadicInterval& b,
                                  const Filtration& alpha = {});
/// Smallest D^alpha interval containing both real intervals.
DyadicInterval common_predecessor(const RealInterval& a, const RealInterval& b,
                                  const Filtration& alpha);

/// log2(|P|/|a|) + log2(|P|/|b|) with P the minimal common predecessor.
int dyadic_distance(const DyadicInterval& a, const DyadicInterval& b, const Filtration& alpha = {});

/// Exact base-2 logarithm of a positive power-of-two rational.
int exact_log2(const Rational& r);
/// Integer n with 2^-n-1 < x <= 2^-n, for x > 0.
int scale_generation(const Rational& x);

/// Truncated cone {(t, h) : |x - t| < h < h_max}.
struct ConeRegion {
  Rational apex;
  Rational h_max{1};
  bool contains(const Rational& t, const Rational& h) const;
};

/// Region I x (0, |I|] above a base interval.
struct CarlesonBox {
  RealInterval base;
  bool contains(const Rational& x, const Rational& h) const;
  bool contains(const CarlesonBox& other) const;
};

/// Midpoint sample of one Whitney cell of a Carleson box. The cell at layer n
/// spans a base subinterval of width w = 2^-n |I| and h in [w/2, w); the sample
/// sits at the cell midpoint with h = w/2, so the window (x - h, x + h) is the
/// cell itself. weight = w * ln 2 is the exact dh dx / h mass of the cell.
struct BoxSample {
  Rational x;
  Rational h;
  int layer = 0;
  double weight = 0.0;
};

/// All samples of layers 0..depth-1, layer-major and left to right.
std::vector<BoxSample> box_lattice(const RealInterval& I, int depth);

}  // namespace zyg
