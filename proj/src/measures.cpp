#include "zygdist/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zygdist/approximation.hpp"
#include "zygdist/parallel.hpp"

namespace zyg {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Offset of coordinate i inside a level-g node index (axis 0 most significant).
std::int64_t node_coordinate(std::size_t idx, int d, int g, int i) {
  const std::size_t mask = (std::size_t{1} << g) - 1;
  return static_cast<std::int64_t>((idx >> (g * (d - 1 - i))) & mask);
}

// Converts a coordinate to half-cell units, rejecting points off the 2^{-N-1} grid.
std::int64_t to_half_units(double v, int depth) {
  const double scaled = std::ldexp(v, depth + 1);
  const double rounded = std::nearbyint(scaled);
  if (!std::isfinite(scaled) || rounded != scaled || std::fabs(rounded) > 9.0e15) {
    std::ostringstream msg;
    msg << "cube corner " << v << " is not a multiple of 2^-" << depth + 1;
    throw DomainError(msg.str());
  }
  return static_cast<std::int64_t>(rounded);
}

}  // namespace

GridMeasure::GridMeasure(int dimension, int depth, std::vector<double> masses)
    : dimension_(dimension), depth_(depth), masses_(std::move(masses)) {
  if (dimension < 1 || dimension > 3) throw std::invalid_argument("GridMeasure: dimension must be 1..3");
  if (depth < 0 || dimension * depth > 26) {
    throw std::invalid_argument("GridMeasure: depth out of range for dimension " + std::to_string(dimension));
  }
  const std::size_t cells = std::size_t{1} << (dimension * depth);
  if (masses_.size() != cells) {
    std::ostringstream msg;
    msg << "GridMeasure: expected " << cells << " masses, got " << masses_.size();
    throw std::invalid_argument(msg.str());
  }
  for (double m : masses_) {
    if (!std::isfinite(m)) throw std::invalid_argument("GridMeasure: non-finite mass");
  }
  const std::size_t side = static_cast<std::size_t>(cells_per_axis()) + 1;
  prefix_.assign(ipow(side, dimension), 0.0);
  const std::size_t n = static_cast<std::size_t>(cells_per_axis());
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t pos = 0;
    for (int i = 0; i < dimension; ++i) {
      const std::size_t k = (cell >> (depth * (dimension - 1 - i))) & (n - 1);
      pos = pos * side + k + 1;
    }
    prefix_[pos] = masses_[cell];
  }
  for (int axis = 0; axis < dimension; ++axis) {
    const std::size_t stride = ipow(side, dimension - 1 - axis);
    for (std::size_t pos = 0; pos < prefix_.size(); ++pos) {
      if ((pos / stride) % side != 0) prefix_[pos] += prefix_[pos - stride];
    }
  }
}

GridMeasure GridMeasure::uniform(int dimension, int depth, double total) {
  const std::size_t cells = std::size_t{1} << (dimension * depth);
  return GridMeasure(dimension, depth, std::vector<double>(cells, total / static_cast<double>(cells)));
}

GridMeasure GridMeasure::zero(int dimension, int depth) {
  return GridMeasure(dimension, depth, std::vector<double>(std::size_t{1} << (dimension * depth), 0.0));
}

GridMeasure GridMeasure::from_density(const LeafField& density) {
  std::vector<double> masses(density.values.size());
  const int shift = -density.dimension * density.depth;
  for (std::size_t i = 0; i < masses.size(); ++i) masses[i] = std::ldexp(density.values[i], shift);
  return GridMeasure(density.dimension, density.depth, std::move(masses));
}

double GridMeasure::total_mass() const { return prefix_.back(); }

double GridMeasure::corner_sum(const std::vector<std::int64_t>& half_index) const {
  const std::int64_t side = cells_per_axis() + 1;
  // Multilinear interpolation: odd half indices average their two grid neighbours.
  double total = 0.0;
  const int d = dimension_;
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::size_t pos = 0;
    double weight = 1.0;
    bool skip = false;
    for (int i = 0; i < d; ++i) {
      const std::int64_t h = half_index[i];
      std::int64_t c;
      if (h % 2 == 0) {
        if (mask & (1 << i)) {
          skip = true;
          break;
        }
        c = h / 2;
      } else {
        c = (mask & (1 << i)) ? (h + 1) / 2 : (h - 1) / 2;
        weight *= 0.5;
      }
      pos = pos * static_cast<std::size_t>(side) + static_cast<std::size_t>(c);
    }
    if (!skip) total += weight * prefix_[pos];
  }
  return total;
}

double GridMeasure::box_mass(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) const {
  const int d = dimension_;
  const std::int64_t top = std::int64_t{2} << depth_;
  std::vector<std::int64_t> a(d), b(d);
  for (int i = 0; i < d; ++i) {
    a[i] = std::clamp<std::int64_t>(lo[i], 0, top);
    b[i] = std::clamp<std::int64_t>(hi[i], 0, top);
    if (a[i] >= b[i]) return 0.0;
  }
  double total = 0.0;
  std::vector<std::int64_t> corner(d);
  for (int mask = 0; mask < (1 << d); ++mask) {
    int lows = 0;
    for (int i = 0; i < d; ++i) {
      const bool low = mask & (1 << i);
      corner[i] = low ? a[i] : b[i];
      lows += low;
    }
    const double s = corner_sum(corner);
    total += (lows % 2 == 0) ? s : -s;
  }
  return total;
}

GridMeasure operator-(const GridMeasure& a, const GridMeasure& b) {
  if (a.dimension() != b.dimension() || a.depth() != b.depth()) {
    throw std::invalid_argument("GridMeasure difference: shape mismatch");
  }
  std::vector<double> m(a.masses().size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.masses()[i] - b.masses()[i];
  return GridMeasure(a.dimension(), a.depth(), std::move(m));
}

DyadicCube DyadicCube::parent() const {
  DyadicCube out{generation - 1, offset};
  for (auto& k : out.offset) k = (generation > 0) ? (k >> 1) : 0;
  if (generation <= 0) {
    for (auto k : offset) {
      if (k != 0) throw DomainError("DyadicCube::parent: only [0,1)^d has a generation -1 parent here");
    }
  }
  return out;
}

namespace {

double density_half_units(const GridMeasure& mu, const std::vector<std::int64_t>& lo,
                          const std::vector<std::int64_t>& hi, double volume) {
  return mu.box_mass(lo, hi) / volume;
}

void check_cube(const GridMeasure& mu, const DyadicCube& Q, int min_generation, int max_generation) {
  if (static_cast<int>(Q.offset.size()) != mu.dimension()) throw std::invalid_argument("DyadicCube: dimension mismatch");
  if (Q.generation < min_generation || Q.generation > max_generation) {
    throw DomainError("dyadic cube generation " + std::to_string(Q.generation) + " outside [" +
                      std::to_string(min_generation) + ", " + std::to_string(max_generation) + "]");
  }
}

}  // namespace

double density(const GridMeasure& mu, const std::vector<double>& x, double h) {
  if (static_cast<int>(x.size()) != mu.dimension()) throw std::invalid_argument("density: dimension mismatch");
  if (!(h > 0.0)) throw DomainError("density: h must be positive");
  const int d = mu.dimension();
  std::vector<std::int64_t> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = to_half_units(x[i] - h / 2.0, mu.depth());
    hi[i] = to_half_units(x[i] + h / 2.0, mu.depth());
  }
  return density_half_units(mu, lo, hi, std::pow(h, d));
}

double delta2_measure(const GridMeasure& mu, const std::vector<double>& x, double h) {
  return density(mu, x, h) - density(mu, x, 2.0 * h);
}

double density(const GridMeasure& mu, const DyadicCube& Q) {
  check_cube(mu, Q, -1, mu.depth());
  const int d = mu.dimension();
  if (Q.generation == -1) {
    for (auto k : Q.offset) {
      if (k != 0) return 0.0;
    }
    return std::ldexp(mu.total_mass(), -d);
  }
  const std::int64_t width = std::int64_t{2} << (mu.depth() - Q.generation);
  std::vector<std::int64_t> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = Q.offset[i] * width;
    hi[i] = lo[i] + width;
  }
  return std::ldexp(mu.box_mass(lo, hi), d * Q.generation);
}

double delta2_dyadic(const GridMeasure& mu, const DyadicCube& Q) {
  check_cube(mu, Q, 0, mu.depth());
  return density(mu, Q) - density(mu, Q.parent());
}

double delta2_max(const GridMeasure& mu, const DyadicCube& Q) {
  check_cube(mu, Q, 0, mu.depth() - 1);
  const int d = mu.dimension();
  const double centre = density(mu, Q);
  double best = 0.0;
  for (int c = 0; c < (1 << d); ++c) {
    DyadicCube child{Q.generation + 1, Q.offset};
    for (int i = 0; i < d; ++i) child.offset[i] = 2 * Q.offset[i] + ((c >> (d - 1 - i)) & 1);
    best = std::max(best, std::fabs(density(mu, child) - centre));
  }
  return best;
}

DyadicMartingale density_martingale(const GridMeasure& mu) {
  const int d = mu.dimension();
  const int N = mu.depth();
  const DyadicMartingale index = DyadicMartingale::zero(d, N);
  std::vector<double> mass(index.node_count(), 0.0);
  const std::size_t leaf_base = index.level_offset(N);
  std::copy(mu.masses().begin(), mu.masses().end(), mass.begin() + static_cast<std::ptrdiff_t>(leaf_base));
  const std::size_t branching = std::size_t{1} << d;
  for (int g = N - 1; g >= 0; --g) {
    const std::size_t base = index.level_offset(g);
    const std::size_t child_base = index.level_offset(g + 1);
    for (std::size_t idx = 0; idx < index.level_size(g); ++idx) {
      double sum = 0.0;
      for (std::size_t c = 0; c < branching; ++c) sum += mass[child_base + index.child(g, idx, c)];
      mass[base + idx] = sum;
    }
  }
  for (int g = 0; g <= N; ++g) {
    const std::size_t base = index.level_offset(g);
    for (std::size_t idx = 0; idx < index.level_size(g); ++idx) mass[base + idx] = std::ldexp(mass[base + idx], d * g);
  }
  return DyadicMartingale::from_values(d, N, std::move(mass));
}

double measure_zygmund_norm(const GridMeasure& mu, MeasureNormMode mode, bool interior_only) {
  if (mode == MeasureNormMode::Dyadic) return star_norm(density_martingale(mu));
  const int d = mu.dimension();
  const int N = mu.depth();
  const std::int64_t top = std::int64_t{2} << N;
  const std::int64_t steps = std::int64_t{1} << N;
  std::vector<double> best(static_cast<std::size_t>(top + 1), 0.0);
  parallel_for(best.size(), [&](std::size_t c0) {
    std::vector<std::int64_t> c(d), lo(d), hi(d), lo2(d), hi2(d);
    c[0] = static_cast<std::int64_t>(c0);
    double local = 0.0;
    for (std::int64_t m = 1; m <= steps; ++m) {
      // In half units the cube Q(x, h) spans c +- m and Q(x, 2h) spans c +- 2m.
      const std::int64_t reach = interior_only ? 2 * m : m;
      if (c[0] - reach < 0 || c[0] + reach > top) continue;
      const double v1 = std::ldexp(std::pow(static_cast<double>(m), d), -N * d);
      const double v2 = v1 * std::ldexp(1.0, d);
      // Odometer over the remaining coordinates.
      for (int i = 1; i < d; ++i) c[i] = reach;
      while (true) {
        for (int i = 0; i < d; ++i) {
          lo[i] = c[i] - m;
          hi[i] = c[i] + m;
          lo2[i] = c[i] - 2 * m;
          hi2[i] = c[i] + 2 * m;
        }
        local = std::max(local, std::fabs(mu.box_mass(lo, hi) / v1 - mu.box_mass(lo2, hi2) / v2));
        int i = d - 1;
        while (i >= 1 && ++c[i] > top - reach) {
          c[i] = reach;
          --i;
        }
        if (i < 1) break;
      }
    }
    best[c0] = local;
  });
  return *std::max_element(best.begin(), best.end());
}

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_depth(const GridMeasure& mu, int depth, const char* name) {
  if (depth < 0 || depth > mu.depth()) {
    throw std::invalid_argument(std::string(name) + ": depth must lie in [0, " + std::to_string(mu.depth()) + "]");
  }
}

double D_from_martingale(const DyadicMartingale& S, double eps, int depth) {
  const int d = S.dimension();
  const std::size_t branching = std::size_t{1} << d;
  std::vector<double> acc(S.level_offset(depth + 1), 0.0);
  double best = 0.0;
  for (int g = depth; g >= 0; --g) {
    const std::size_t base = S.level_offset(g);
    for (std::size_t idx = 0; idx < S.level_size(g); ++idx) {
      double total = 0.0;
      if (g < depth) {
        const std::size_t child_base = S.level_offset(g + 1);
        double dmax = 0.0;
        for (std::size_t c = 0; c < branching; ++c) dmax = std::max(dmax, std::fabs(S.jumps()[child_base + S.child(g, idx, c)]));
        const bool flagged = dmax > eps;
        const double child_volume = std::ldexp(1.0, -d * (g + 1));
        for (std::size_t c = 0; c < branching; ++c) {
          // The child counts itself when its parent is flagged.
          const double own = acc[child_base + S.child(g, idx, c)] + (flagged ? child_volume : 0.0);
          best = std::max(best, std::ldexp(own, d * (g + 1)));
          total += own;
        }
      }
      acc[base + idx] = total;
      if (g == 0) best = std::max(best, total);
    }
  }
  return best;
}

// |delta2_measure(centre K, side K)| for every cell K of generation 0..depth, in node order.
std::vector<double> cell_second_differences(const GridMeasure& mu, const DyadicMartingale& index, int depth) {
  const int d = mu.dimension();
  const int N = mu.depth();
  std::vector<double> out(index.level_offset(depth + 1), 0.0);
  for (int g = 0; g <= depth; ++g) {
    const std::size_t base = index.level_offset(g);
    const std::int64_t width = std::int64_t{2} << (N - g);
    const double volume = std::ldexp(1.0, -d * g);
    parallel_for(index.level_size(g), [&](std::size_t idx) {
      std::vector<std::int64_t> lo(d), hi(d), lo2(d), hi2(d);
      for (int i = 0; i < d; ++i) {
        lo[i] = node_coordinate(idx, d, g, i) * width;
        hi[i] = lo[i] + width;
        lo2[i] = lo[i] - width / 2;
        hi2[i] = hi[i] + width / 2;
      }
      const double inner = mu.box_mass(lo, hi) / volume;
      const double outer = mu.box_mass(lo2, hi2) / std::ldexp(volume, d);
      out[base + idx] = std::fabs(inner - outer);
    });
  }
  return out;
}

double box_sup_nd(const DyadicMartingale& index, const std::vector<double>& cell_value, int depth) {
  const int d = index.dimension();
  const std::size_t branching = std::size_t{1} << d;
  std::vector<double> acc(index.level_offset(depth + 1), 0.0);
  double best = 0.0;
  for (int g = depth; g >= 0; --g) {
    const std::size_t base = index.level_offset(g);
    const double volume = std::ldexp(1.0, -d * g);
    for (std::size_t idx = 0; idx < index.level_size(g); ++idx) {
      double total = cell_value[base + idx] * volume * kLn2;
      if (g < depth) {
        const std::size_t child_base = index.level_offset(g + 1);
        for (std::size_t c = 0; c < branching; ++c) total += acc[child_base + index.child(g, idx, c)];
      }
      acc[base + idx] = total;
      best = std::max(best, total / volume);
    }
  }
  return best;
}

std::vector<double> indicator(const std::vector<double>& values, double eps) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] > eps ? 1.0 : 0.0;
  return out;
}

}  // namespace

double D_measure(const GridMeasure& mu, double eps, int depth) {
  if (!(eps > 0.0)) throw std::invalid_argument("D_measure: eps must be positive");
  check_depth(mu, depth, "D_measure");
  return D_from_martingale(density_martingale(mu), eps, depth);
}

double C_measure(const GridMeasure& mu, double eps, int depth) {
  if (!(eps > 0.0)) throw std::invalid_argument("C_measure: eps must be positive");
  check_depth(mu, depth, "C_measure");
  const DyadicMartingale index = DyadicMartingale::zero(mu.dimension(), depth);
  return box_sup_nd(index, indicator(cell_second_differences(mu, index, depth), eps), depth);
}

double ibmo_measure_functional(const GridMeasure& nu, const DyadicCube& Q, int depth) {
  check_cube(nu, Q, 0, depth);
  check_depth(nu, depth, "ibmo_measure_functional");
  const int d = nu.dimension();
  const int N = nu.depth();
  double total = 0.0;
  std::vector<std::int64_t> lo(d), hi(d), lo2(d), hi2(d), k(d), first(d);
  for (int j = Q.generation; j <= depth; ++j) {
    const std::int64_t per_axis = std::int64_t{1} << (j - Q.generation);
    const std::int64_t width = std::int64_t{2} << (N - j);
    const double volume = std::ldexp(1.0, -d * j);
    for (int i = 0; i < d; ++i) first[i] = k[i] = Q.offset[i] * per_axis;
    while (true) {
      for (int i = 0; i < d; ++i) {
        lo[i] = k[i] * width;
        hi[i] = lo[i] + width;
        lo2[i] = lo[i] - width / 2;
        hi2[i] = hi[i] + width / 2;
      }
      const double v = nu.box_mass(lo, hi) / volume - nu.box_mass(lo2, hi2) / std::ldexp(volume, d);
      total += volume * kLn2 * v * v;
      int i = d - 1;
      while (i >= 0 && ++k[i] == first[i] + per_axis) {
        k[i] = first[i];
        --i;
      }
      if (i < 0) break;
    }
  }
  return std::ldexp(total, d * Q.generation);
}

DistanceProfile D_measure_profile(const GridMeasure& mu, const std::vector<double>& eps, const std::vector<int>& depths) {
  for (int n : depths) check_depth(mu, n, "D_measure_profile");
  const DyadicMartingale S = density_martingale(mu);
  return make_profile("D_measure", eps, depths, [&](double e, int n) {
    if (!(e > 0.0)) throw std::invalid_argument("D_measure: eps must be positive");
    return D_from_martingale(S, e, n);
  });
}

DistanceProfile C_measure_profile(const GridMeasure& mu, const std::vector<double>& eps, const std::vector<int>& depths) {
  int top = 0;
  for (int n : depths) {
    check_depth(mu, n, "C_measure_profile");
    top = std::max(top, n);
  }
  const DyadicMartingale index = DyadicMartingale::zero(mu.dimension(), top);
  const std::vector<double> values = cell_second_differences(mu, index, top);
  return make_profile("C_measure", eps, depths, [&](double e, int n) {
    if (!(e > 0.0)) throw std::invalid_argument("C_measure: eps must be positive");
    return box_sup_nd(index, indicator(values, e), n);
  });
}

GridMeasure measure_truncate(const GridMeasure& mu, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("measure_truncate: eps must be positive");
  const DyadicMartingale B = truncate_jumps(density_martingale(mu), TruncationRule::parent_max(eps));
  return GridMeasure::from_density(B.leaves());
}

}  // namespace zyg
