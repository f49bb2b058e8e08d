#include "zygdist/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "zygdist/parallel.hpp"

namespace zyg {

namespace {

void require_positive_step(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("divided difference: step must be positive");
}

void require_depth(const SampledFunction& f, int depth, const char* who) {
  if (depth < 1 || depth > f.depth()) {
    throw std::invalid_argument(std::string(who) + ": depth " + std::to_string(depth) + " outside [1, " +
                                std::to_string(f.depth()) + "]");
  }
}

// Squared (or indicator) second differences of every dyadic J of generation
// 0..N-1, level-major like a martingale tree of depth N-1.
std::vector<double> dyadic_second_differences(const SampledFunction& f) {
  const int N = f.depth();
  std::vector<double> out((std::size_t{1} << N) - 1);
  std::size_t pos = 0;
  for (int g = 0; g < N; ++g) {
    for (std::int64_t k = 0; k < (std::int64_t{1} << g); ++k) {
      out[pos++] = second_difference_dyadic(f, {g, k});
    }
  }
  return out;
}

// Sup over bases I of generation < depth of (1/|I|) sum |J| w(J) over J in D(I)
// with generation <= depth-1, where w is given level-major.
double box_sup(const std::vector<double>& w, int depth) {
  std::vector<double> acc(w.size(), 0.0);
  double best = 0.0;
  for (int g = depth - 1; g >= 0; --g) {
    const std::size_t base = (std::size_t{1} << g) - 1;
    const std::size_t child_base = (std::size_t{1} << (g + 1)) - 1;
    for (std::size_t k = 0; k < (std::size_t{1} << g); ++k) {
      double total = std::ldexp(w[base + k], -g);
      if (g + 1 < depth) total += acc[child_base + 2 * k] + acc[child_base + 2 * k + 1];
      acc[base + k] = total;
      best = std::max(best, std::ldexp(total, g));
    }
  }
  return best;
}

}  // namespace

double delta1(const SampledFunction& f, double x, double h, EvalOptions options) {
  require_positive_step(h);
  return (f.at(x + h, options) - f.at(x, options)) / h;
}

double delta2(const SampledFunction& f, double x, double h, EvalOptions options) {
  require_positive_step(h);
  return (f.at(x + h, options) - 2.0 * f.at(x, options) + f.at(x - h, options)) / h;
}

bool in_A(const SampledFunction& f, double eps, double x, double h, EvalOptions options) {
  return std::fabs(delta2(f, x, h, options)) > eps;
}

double zygmund_seminorm(const SampledFunction& f) {
  const std::int64_t n = f.cells();
  const auto& v = f.values();
  std::vector<double> row_max(static_cast<std::size_t>(n + 1), 0.0);
  parallel_for(static_cast<std::size_t>(n + 1), [&](std::size_t i) {
    const auto ii = static_cast<std::int64_t>(i);
    const std::int64_t reach = std::min(ii, n - ii);
    double m = 0.0;
    for (std::int64_t j = 1; j <= reach; ++j) {
      const double d2 = (v[i + j] - 2.0 * v[i] + v[i - j]) / std::ldexp(static_cast<double>(j), -f.depth());
      m = std::max(m, std::fabs(d2));
    }
    row_max[i] = m;
  });
  return *std::max_element(row_max.begin(), row_max.end());
}

double dyadic_zygmund_seminorm(const SampledFunction& f) {
  double m = 0.0;
  for (double d : dyadic_second_differences(f)) m = std::max(m, std::fabs(d));
  return m;
}

double strichartz_functional(const SampledFunction& f, const RealInterval& I, int depth) {
  double sum = 0.0;
  for (const BoxSample& s : box_lattice(I, depth)) {
    const double d2 = (f.at(s.x + s.h) - 2.0 * f.at(s.x) + f.at(s.x - s.h)) / s.h.to_double();
    sum += s.weight * d2 * d2;
  }
  return sum / I.length().to_double();
}

double strichartz_profile_value(const SampledFunction& f, int depth) {
  require_depth(f, depth, "strichartz_profile_value");
  std::vector<double> w = dyadic_second_differences(f);
  for (double& d : w) d = d * d;
  return std::numbers::ln2 * box_sup(w, depth);
}

double C_functional(const SampledFunction& f, double eps, int depth) {
  require_depth(f, depth, "C_functional");
  if (!(eps > 0.0)) throw std::invalid_argument("C_functional: eps must be positive");
  std::vector<double> w = dyadic_second_differences(f);
  for (double& d : w) d = std::fabs(d) > eps ? 1.0 : 0.0;
  return std::numbers::ln2 * box_sup(w, depth);
}

double D_functional(const DyadicMartingale& S, double eps, int depth) {
  if (S.dimension() != 1) throw std::invalid_argument("D_functional: one-dimensional martingale expected");
  if (depth < 1 || depth > S.depth()) throw std::invalid_argument("D_functional: depth outside [1, N]");
  if (!(eps > 0.0)) throw std::invalid_argument("D_functional: eps must be positive");
  const double half = eps / 2.0;
  std::vector<double> acc(S.level_offset(depth + 1), 0.0);
  double best = 0.0;
  for (int g = depth; g >= 0; --g) {
    const std::size_t base = S.level_offset(g);
    for (std::size_t k = 0; k < S.level_size(g); ++k) {
      double total = std::fabs(S.jumps()[base + k]) > half ? std::ldexp(1.0, -g) : 0.0;
      if (g < depth) {
        const std::size_t child_base = S.level_offset(g + 1);
        total += acc[child_base + 2 * k] + acc[child_base + 2 * k + 1];
      }
      acc[base + k] = total;
      best = std::max(best, std::ldexp(total, g));
    }
  }
  return best;
}

double D_functional(const SampledFunction& f, double eps, int depth) {
  return D_functional(average_growth(f), eps, depth);
}

double growth_ratio(const std::vector<int>& depths, const std::vector<double>& row) {
  if (depths.size() != row.size() || depths.empty()) throw std::invalid_argument("growth_ratio: shape mismatch");
  std::size_t top = 0;
  for (std::size_t j = 1; j < depths.size(); ++j) {
    if (depths[j] > depths[top]) top = j;
  }
  std::size_t ref = top;
  for (std::size_t j = 0; j < depths.size(); ++j) {
    if (depths[j] < depths[top] && 2 * depths[j] >= depths[top] && (ref == top || depths[j] < depths[ref])) ref = j;
  }
  if (ref == top) {
    for (std::size_t j = 0; j < depths.size(); ++j) {
      if (depths[j] < depths[top] && (ref == top || depths[j] > depths[ref])) ref = j;
    }
  }
  if (ref == top) return 1.0;
  if (row[top] == 0.0 && row[ref] == 0.0) return 1.0;
  if (row[ref] == 0.0) return std::numeric_limits<double>::infinity();
  return row[top] / row[ref];
}

bool profile_bounded(const std::vector<int>& depths, const std::vector<double>& row, double tau) {
  return growth_ratio(depths, row) <= 1.0 + tau;
}

ThresholdEstimate estimate_threshold(const DistanceProfile& profile, double tau) {
  if (profile.depths.size() < 3) throw std::invalid_argument("estimate_threshold: at least three depths required");
  if (profile.eps.empty()) throw std::invalid_argument("estimate_threshold: empty eps grid");
  std::vector<std::size_t> order(profile.eps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return profile.eps[a] < profile.eps[b]; });

  ThresholdEstimate est;
  est.tau = tau;
  est.top_depth = *std::max_element(profile.depths.begin(), profile.depths.end());
  const int top = est.top_depth;
  est.reference_depth = top;
  for (int d : profile.depths) {
    if (d < top && 2 * d >= top && (est.reference_depth == top || d < est.reference_depth)) est.reference_depth = d;
  }
  est.method = "growth-ratio: smallest grid eps from which every row satisfies value[depth " +
               std::to_string(est.top_depth) + "] <= (1 + tau) value[depth " +
               std::to_string(est.reference_depth) + "]";
  std::size_t first_stable = order.size();
  for (std::size_t pos = order.size(); pos-- > 0;) {
    if (!profile_bounded(profile.depths, profile.values[order[pos]], tau)) break;
    first_stable = pos;
  }
  if (first_stable == order.size()) {
    est.conclusive = false;
    est.eps = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  est.conclusive = true;
  est.eps = profile.eps[order[first_stable]];
  return est;
}

DistanceProfile make_profile(const std::string& name, const std::vector<double>& eps, const std::vector<int>& depths,
                             const std::function<double(double, int)>& value) {
  if (eps.empty() || depths.empty()) throw std::invalid_argument("make_profile: empty grid");
  DistanceProfile p;
  p.functional = name;
  p.eps = eps;
  p.depths = depths;
  p.values.assign(eps.size(), std::vector<double>(depths.size(), 0.0));
  parallel_for(eps.size() * depths.size(), [&](std::size_t cell) {
    const std::size_t i = cell / depths.size();
    const std::size_t j = cell % depths.size();
    p.values[i][j] = value(eps[i], depths[j]);
  });
  return p;
}

DistanceProfile D_profile(const SampledFunction& f, const std::vector<double>& eps, const std::vector<int>& depths) {
  const DyadicMartingale S = average_growth(f);
  return make_profile("D", eps, depths, [&](double e, int d) { return D_functional(S, e, d); });
}

DistanceProfile C_profile(const SampledFunction& f, const std::vector<double>& eps, const std::vector<int>& depths) {
  return make_profile("C", eps, depths, [&](double e, int d) { return C_functional(f, e, d); });
}

std::vector<double> auto_eps_grid(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;
  std::vector<double> out;
  for (int k = 0; k <= 22; ++k) {
    const double base = (k % 2 == 0) ? scale : scale * std::numbers::sqrt2;
    out.push_back(std::ldexp(base, -10 + k / 2));
  }
  return out;
}

double cone_cell_weight(double a, double b, double x, double t0, double t1) {
  auto g = [&](double t) { return std::max(0.0, std::min(b, x + t) - std::max(a, x - t)); };
  std::vector<double> cuts{t0, t1};
  for (double c : {x - a, b - x, a - x, x - b}) {
    if (c > t0 && c < t1) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    const double glo = g(lo);
    const double ghi = g(hi);
    const double beta = (ghi - glo) / (hi - lo);
    const double alpha = glo - beta * lo;
    total += alpha * (1.0 / lo - 1.0 / hi) + beta * std::log(hi / lo);
  }
  return total;
}

namespace {

double cone_sum(const SampledFunction& f, double x, int depth, const std::function<double(double)>& weight_of) {
  require_depth(f, depth, "cone functional");
  double total = 0.0;
  for (int j = 0; j < depth; ++j) {
    const double t0 = std::ldexp(1.0, -j - 1);
    const double t1 = std::ldexp(1.0, -j);
    const auto kmin = static_cast<std::int64_t>(std::floor(std::ldexp(x - t1, j)));
    const auto kmax = static_cast<std::int64_t>(std::floor(std::ldexp(x + t1, j)));
    for (std::int64_t k = kmin; k <= kmax; ++k) {
      if (k < 0 || k >= (std::int64_t{1} << j)) continue;  // zero or omitted outside [0,1)
      const double a = std::ldexp(static_cast<double>(k), -j);
      const double b = std::ldexp(static_cast<double>(k + 1), -j);
      const double w = cone_cell_weight(a, b, x, t0, t1);
      if (w == 0.0) continue;
      total += w * weight_of(second_difference_dyadic(f, {j, k}));
    }
  }
  return total;
}

}  // namespace

double cone_counting(const SampledFunction& f, double eps, double x, int depth) {
  if (!(eps > 0.0)) throw std::invalid_argument("cone_counting: eps must be positive");
  return std::sqrt(cone_sum(f, x, depth, [eps](double d2) { return std::fabs(d2) > eps ? 1.0 : 0.0; }));
}

double cone_square(const SampledFunction& f, double x, int depth) {
  return std::sqrt(cone_sum(f, x, depth, [](double d2) { return d2 * d2; }));
}

LeafField truncated_quadratic(const DyadicMartingale& S, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("truncated_quadratic: eps must be positive");
  const std::size_t leaves = S.level_size(S.depth());
  LeafField out{S.dimension(), S.depth(), std::vector<double>(leaves)};
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
    int count = 0;
    for (int n = 1; n <= S.depth(); ++n) {
      if (std::fabs(S.jump(n, S.ancestor_of_leaf(leaf, n))) > eps) ++count;
    }
    out.values[leaf] = std::sqrt(static_cast<double>(count));
  }
  return out;
}

double lp_norm(const LeafField& field, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp_norm: p must satisfy 1 < p < infinity");
  const double volume = field.cell_volume();
  double sum = 0.0;
  for (double v : field.values) sum += std::pow(std::fabs(v), p) * volume;
  return std::pow(sum, 1.0 / p);
}

}  // namespace zyg
