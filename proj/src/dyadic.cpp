#include "zygdist/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numbers>

namespace zyg {

namespace {

void check_generation(int n) {
  if (n < kMinGeneration || n > kMaxGeneration) {
    throw std::out_of_range("dyadic generation " + std::to_string(n) + " outside [" +
                            std::to_string(kMinGeneration) + ", " + std::to_string(kMaxGeneration) + "]");
  }
}

// x * 2^n for any integer n.
Rational scale2(const Rational& x, int n) { return x * Rational::dyadic(1, -n); }

// Does some generation-n interval of D^0 lie inside [l, r)?
bool generation_fits(int n, const Rational& l, const Rational& r) {
  Rational t = translation(n);
  std::int64_t k = scale2(l + t, n).ceil();
  return interval_of(n, k).right <= r;
}

}  // namespace

Rational translation(int n) {
  check_generation(n);
  if (n >= 0) return Rational(0);
  int m = (1 - n) / 2;
  return Rational(((std::int64_t{1} << (2 * m)) - 1) / 3);
}

RealInterval::RealInterval(Rational l, Rational r) : left(l), right(r) {
  if (!(left < right)) {
    throw std::invalid_argument("RealInterval: empty interval [" + left.to_string() + ", " +
                                right.to_string() + ")");
  }
}

std::string DyadicInterval::to_string() const {
  return "(" + std::to_string(generation) + ", " + std::to_string(offset) + ")";
}

Rational length(const DyadicInterval& I) {
  check_generation(I.generation);
  return Rational::dyadic(1, I.generation);
}

RealInterval interval_of(int n, std::int64_t k, const Filtration& alpha) {
  check_generation(n);
  Rational t = translation(n);
  Rational left = Rational::dyadic(k, n) - t - alpha.shift;
  return RealInterval(left, left + Rational::dyadic(1, n));
}

RealInterval interval_of(const DyadicInterval& I, const Filtration& alpha) {
  return interval_of(I.generation, I.offset, alpha);
}

DyadicInterval locate(int n, const Rational& x, const Filtration& alpha) {
  check_generation(n);
  return {n, scale2(x + alpha.shift + translation(n), n).floor()};
}

DyadicInterval predecessor(const DyadicInterval& I) {
  return locate(I.generation - 1, interval_of(I).left);
}

std::array<DyadicInterval, 2> children(const DyadicInterval& I) {
  DyadicInterval first = locate(I.generation + 1, interval_of(I).left);
  return {first, DyadicInterval{first.generation, first.offset + 1}};
}

DyadicInterval ancestor(const DyadicInterval& I, int g) {
  if (g > I.generation) throw std::invalid_argument("ancestor: generation finer than interval");
  if (g >= 0 && I.generation >= 0) {
    // No translations involved: plain bit shift.
    return {g, I.offset >> (I.generation - g)};
  }
  return locate(g, interval_of(I).left);
}

bool is_descendant(const DyadicInterval& inner, const DyadicInterval& outer) {
  if (inner.generation < outer.generation) return false;
  return ancestor(inner, outer.generation) == outer;
}

int exact_log2(const Rational& r) {
  if (r <= Rational(0)) throw std::invalid_argument("exact_log2: nonpositive argument");
  auto is_pow2 = [](std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; };
  if (!is_pow2(r.num()) || !is_pow2(r.den())) {
    throw std::invalid_argument("exact_log2: " + r.to_string() + " is not a power of two");
  }
  return std::countr_zero(static_cast<std::uint64_t>(r.num())) -
         std::countr_zero(static_cast<std::uint64_t>(r.den()));
}

int scale_generation(const Rational& x) {
  if (x <= Rational(0)) throw std::invalid_argument("scale_generation: nonpositive length");
  int n = static_cast<int>(std::floor(-std::log2(x.to_double())));
  // Correct the floating guess exactly: want 2^{-n-1} < x <= 2^{-n}.
  while (x > Rational::dyadic(1, n)) --n;
  while (!(Rational::dyadic(1, n + 1) < x)) ++n;
  return n;
}

DyadicInterval containing_dyadic(const RealInterval& I, const Filtration& alpha) {
  int n = std::min(scale_generation(I.length()), kMaxGeneration);
  for (; n >= kMinGeneration; --n) {
    DyadicInterval J = locate(n, I.left, alpha);
    if (I.right <= interval_of(J, alpha).right) return J;
  }
  throw std::out_of_range("containing_dyadic: no enclosing interval within generation range");
}

Covering covering_F(const RealInterval& I, const Filtration& alpha, int min_generation) {
  // Work in D^0 coordinates: J in D^alpha lies in I iff J + alpha lies in I + alpha.
  const Rational l = I.left + alpha.shift;
  const Rational r = I.right + alpha.shift;
  Covering out;
  int n0 = scale_generation(I.length());
  while (n0 <= min_generation && !generation_fits(n0, l, r)) ++n0;
  if (n0 > min_generation) {
    out.residual = I.length();
    return out;
  }
  // At most two generation-n0 intervals fit, and they are adjacent.
  Rational t0 = translation(n0);
  std::int64_t k = scale2(l + t0, n0).ceil();
  out.intervals.push_back({n0, k});
  Rational cl = interval_of(n0, k).left;
  Rational cr = interval_of(n0, k).right;
  if (interval_of(n0, k + 1).right <= r) {
    out.intervals.push_back({n0, k + 1});
    cr = interval_of(n0, k + 1).right;
  }
  // cl and cr are generation-n0 endpoints, hence endpoints at every finer generation.
  for (int n = n0 + 1; n <= min_generation && (l < cl || cr < r); ++n) {
    Rational w = Rational::dyadic(1, n);
    if (l <= cl - w) {
      cl -= w;
      out.intervals.push_back(locate(n, cl));
    }
    if (cr + w <= r) {
      out.intervals.push_back(locate(n, cr));
      cr += w;
    }
  }
  out.residual = (cl - l) + (r - cr);
  std::sort(out.intervals.begin(), out.intervals.end());
  return out;
}

namespace {

// Tiles J left to right by D^0 descendants of the given lengths, whose sum is |J|.
std::vector<DyadicInterval> tile(const DyadicInterval& J, const std::vector<Rational>& lengths) {
  std::vector<DyadicInterval> out;
  Rational pos = interval_of(J).left;
  for (const Rational& w : lengths) {
    int g = exact_log2(Rational(1) / w);
    DyadicInterval piece = locate(g, pos);
    if (!is_descendant(piece, J) || interval_of(piece).left != pos) {
      throw std::logic_error("paired_coverings: lengths do not tile " + J.to_string());
    }
    out.push_back(piece);
    pos += w;
  }
  return out;
}

}  // namespace

PairedCovering paired_coverings(const RealInterval& I, const Filtration& alpha, int min_generation) {
  RealInterval adjacent(I.left - I.length(), I.left);
  std::deque<DyadicInterval> a;
  std::deque<DyadicInterval> b;
  for (auto& J : covering_F(I, alpha, min_generation).intervals) a.push_back(J);
  for (auto& J : covering_F(adjacent, alpha, min_generation).intervals) b.push_back(J);
  PairedCovering out{adjacent, {}, {}};

  // Splits the head of `big` into pieces matching a run of heads of `small`.
  auto split = [](std::deque<DyadicInterval>& big, std::deque<DyadicInterval>& small,
                  std::vector<DyadicInterval>& big_out, std::vector<DyadicInterval>& small_out) {
    const Rational target = length(big.front());
    Rational sum(0);
    std::vector<DyadicInterval> run;
    std::vector<Rational> lengths;
    while (!small.empty() && sum < target) {
      run.push_back(small.front());
      lengths.push_back(length(small.front()));
      sum += lengths.back();
      small.pop_front();
    }
    if (sum != target) return false;
    for (auto& J : tile(big.front(), lengths)) big_out.push_back(J);
    for (auto& J : run) small_out.push_back(J);
    big.pop_front();
    return true;
  };

  while (!a.empty() && !b.empty()) {
    Rational la = length(a.front());
    Rational lb = length(b.front());
    if (la == lb) {
      out.first.push_back(a.front());
      out.second.push_back(b.front());
      a.pop_front();
      b.pop_front();
    } else if (la > lb) {
      if (!split(a, b, out.first, out.second)) break;
    } else {
      if (!split(b, a, out.second, out.first)) break;
    }
  }
  return out;
}

DyadicInterval common_predecessor(const DyadicInterval& a, const DyadicInterval& b, const Filtration&) {
  DyadicInterval x = a;
  DyadicInterval y = b;
  while (x.generation > y.generation) x = predecessor(x);
  while (y.generation > x.generation) y = predecessor(y);
  while (x != y) {
    x = predecessor(x);
    y = predecessor(y);
  }
  return x;
}

DyadicInterval common_predecessor(const RealInterval& a, const RealInterval& b, const Filtration& alpha) {
  RealInterval hull(min(a.left, b.left), max(a.right, b.right));
  return containing_dyadic(hull, alpha);
}

int dyadic_distance(const DyadicInterval& a, const DyadicInterval& b, const Filtration& alpha) {
  DyadicInterval p = common_predecessor(a, b, alpha);
  return (a.generation - p.generation) + (b.generation - p.generation);
}

bool ConeRegion::contains(const Rational& t, const Rational& h) const {
  return abs(apex - t) < h && h < h_max;
}

bool CarlesonBox::contains(const Rational& x, const Rational& h) const {
  return base.contains(x) && Rational(0) < h && h <= base.length();
}

bool CarlesonBox::contains(const CarlesonBox& other) const {
  return base.contains(other.base);
}

std::vector<BoxSample> box_lattice(const RealInterval& I, int depth) {
  if (depth < 1) throw std::invalid_argument("box_lattice: depth must be >= 1");
  if (depth > 30) throw std::invalid_argument("box_lattice: depth above 30");
  std::vector<BoxSample> out;
  out.reserve((std::size_t{1} << depth) - 1);
  const Rational len = I.length();
  for (int n = 0; n < depth; ++n) {
    Rational w = len * Rational::dyadic(1, n);
    Rational half = w / Rational(2);
    double weight = w.to_double() * std::numbers::ln2;
    Rational x = I.left + half;
    for (std::int64_t c = 0; c < (std::int64_t{1} << n); ++c) {
      out.push_back({x, half, n, weight});
      x += w;
    }
  }
  return out;
}

}  // namespace zyg
