#include "zygdist/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zygdist/parallel.hpp"

namespace zyg {

namespace {

constexpr std::size_t kBatch = 64;

// Runs make(j) for j in [0, count) in parallel batches and folds each result
// into the accumulator in increasing j, so the sum order never depends on threads.
template <typename Item, typename Make, typename Fold>
void ordered_reduce(std::size_t count, Make make, Fold fold) {
  for (std::size_t start = 0; start < count; start += kBatch) {
    const std::size_t n = std::min(kBatch, count - start);
    std::vector<Item> items(n);
    parallel_for(n, [&](std::size_t i) { items[i] = make(start + i); });
    for (std::size_t i = 0; i < n; ++i) fold(start + i, items[i]);
  }
}

// Moves b by at most half a unit u so that f and b share the grid u Z; then
// t = f - b is exact. u is the finest power of two keeping |f|, |b| below 2^52 u,
// so the split is exact whenever every bit of f lies within that window.
void exact_split(double f, double& b, double& t) {
  if (f == 0.0) {
    t = -b;
    return;
  }
  const double top = std::max(std::fabs(f), std::fabs(b));
  const double u = std::ldexp(1.0, std::ilogb(top) - 51);
  if (std::fmod(f, u) == 0.0) {
    const double q = std::nearbyint(b / u) * u;
    if (f - q + q == f) {
      b = q;
      t = f - q;
      return;
    }
  }
  t = f - b;
}

std::int64_t lattice_cells(const Rational& alpha, int depth) {
  Rational scaled = alpha * Rational::dyadic(1, -depth);
  if (!scaled.is_integer()) throw std::logic_error("alpha lattice point off the grid");
  return scaled.num();
}

}  // namespace

DyadicMartingale truncate_jumps(const DyadicMartingale& S, const TruncationRule& rule) {
  if (!(rule.threshold > 0.0)) throw std::invalid_argument("truncate_jumps: threshold must be positive");
  const int d = S.dimension();
  const std::size_t branching = std::size_t{1} << d;
  if (rule.mode != TruncationRule::Mode::ParentMax && d != 1) {
    throw std::invalid_argument("truncate_jumps: per-node rules need d = 1; use the parent-max rule");
  }
  std::vector<double> jumps(S.node_count(), 0.0);
  for (int g = 0; g < S.depth(); ++g) {
    const std::size_t child_base = S.level_offset(g + 1);
    for (std::size_t idx = 0; idx < S.level_size(g); ++idx) {
      bool keep = false;
      if (rule.mode == TruncationRule::Mode::ParentMax) {
        double m = 0.0;
        for (std::size_t c = 0; c < branching; ++c) m = std::max(m, std::fabs(S.jumps()[child_base + S.child(g, idx, c)]));
        keep = m > rule.threshold;
      } else {
        const double left = S.jumps()[child_base + 2 * idx];
        const double right = S.jumps()[child_base + 2 * idx + 1];
        if (std::fabs(left) != std::fabs(right)) {
          std::ostringstream msg;
          msg << "truncate_jumps: sibling jumps at generation " << g + 1 << " below node " << idx
              << " have unequal magnitudes " << left << " and " << right;
          throw std::logic_error(msg.str());
        }
        keep = std::fabs(left) > rule.threshold;
      }
      if (!keep) continue;
      for (std::size_t c = 0; c < branching; ++c) {
        const std::size_t ci = child_base + S.child(g, idx, c);
        jumps[ci] = S.jumps()[ci];
      }
    }
  }
  return DyadicMartingale::from_jumps(d, S.depth(), S.value(0, 0), std::move(jumps));
}

DyadicMartingale sobolev_truncate(const DyadicMartingale& S, double eps) {
  return truncate_jumps(S, TruncationRule::sobolev(eps));
}

namespace {

SampledFunction difference(const SampledFunction& a, const SampledFunction& b) {
  std::vector<double> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return SampledFunction(a.depth(), std::move(v));
}

}  // namespace

DistanceReport dyadic_distance_report(const SampledFunction& f, const std::vector<double>& eps,
                                      const std::vector<int>& depths, double tau) {
  DistanceReport report;
  report.profile = D_profile(f, eps, depths);
  if (depths.size() >= 3) report.profile.estimate = estimate_threshold(report.profile, tau);
  const DyadicMartingale S = average_growth(f);
  report.measured_distance.assign(eps.size(), 0.0);
  report.approximant_bmo.assign(eps.size(), 0.0);
  parallel_for(eps.size(), [&](std::size_t i) {
    const DyadicMartingale B = truncate_jumps(S, TruncationRule::ibmo(eps[i]));
    report.measured_distance[i] = dyadic_zygmund_seminorm(difference(f, integrate(B)));
    report.approximant_bmo[i] = bmo_norm(B);
  });
  return report;
}

std::vector<Rational> alpha_lattice(const Rational& R, std::int64_t M, int depth) {
  if (R < Rational(1)) throw std::invalid_argument("alpha lattice: R must be >= 1");
  if (M <= 0) throw std::invalid_argument("alpha lattice: M must be positive");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(M));
  const Rational step = Rational(2) * R / Rational(M);
  for (std::int64_t j = 0; j < M; ++j) {
    Rational a = -R + (Rational(j) + Rational(1, 2)) * step;
    if (!(a * Rational::dyadic(1, -depth)).is_integer()) {
      throw std::invalid_argument("alpha lattice: point " + a.to_string() + " is not a multiple of 2^-" +
                                  std::to_string(depth) + "; choose M dividing R 2^depth");
    }
    out.push_back(a);
  }
  return out;
}

SampledFunction translation_average(const FunctionFamily& family, const Rational& R, std::int64_t M, int depth) {
  if (M == 0) M = std::int64_t{1} << depth;
  const auto alphas = alpha_lattice(R, M, depth);
  const std::int64_t cells = std::int64_t{1} << depth;
  std::vector<double> sum(static_cast<std::size_t>(cells + 1), 0.0);
  ordered_reduce<std::vector<double>>(
      alphas.size(),
      [&](std::size_t j) {
        SampledFunction t = family(alphas[j]);
        if (t.depth() != depth) throw std::invalid_argument("translation_average: member depth mismatch");
        return t.values();
      },
      [&](std::size_t j, const std::vector<double>& t) {
        const std::int64_t a = lattice_cells(alphas[j], depth);
        for (std::int64_t i = 0; i <= cells; ++i) {
          const std::int64_t y = i + a;
          if (y >= 0 && y < cells) sum[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(y)];
        }
      });
  for (double& v : sum) v /= static_cast<double>(M);
  return SampledFunction(depth, std::move(sum));
}

double sliding_bmo_norm(const LeafField& field) {
  if (field.dimension != 1) throw std::invalid_argument("sliding_bmo_norm: one-dimensional field expected");
  const std::size_t n = field.values.size();
  std::vector<long double> p1(n + 1, 0.0L);
  std::vector<long double> p2(n + 1, 0.0L);
  for (std::size_t i = 0; i < n; ++i) {
    const long double v = field.values[i];
    p1[i + 1] = p1[i] + v;
    p2[i + 1] = p2[i] + v * v;
  }
  long double best = 0.0L;
  for (std::size_t w = n; w >= 1; w /= 2) {
    for (std::size_t s = 0; s + w <= n; ++s) {
      const long double mean = (p1[s + w] - p1[s]) / static_cast<long double>(w);
      const long double var = (p2[s + w] - p2[s]) / static_cast<long double>(w) - mean * mean;
      best = std::max(best, var);
    }
    if (w == 1) break;
  }
  return static_cast<double>(std::sqrt(std::max(best, 0.0L)));
}

AveragedField garnett_jones_average(const FieldFamily& family, const Rational& R, std::int64_t M, int depth) {
  if (M == 0) M = std::int64_t{1} << depth;
  const auto alphas = alpha_lattice(R, M, depth);
  const std::int64_t cells = std::int64_t{1} << depth;
  std::vector<double> sum(static_cast<std::size_t>(cells), 0.0);
  ordered_reduce<std::vector<double>>(
      alphas.size(),
      [&](std::size_t j) {
        LeafField b = family(alphas[j]);
        if (b.dimension != 1 || b.depth != depth || b.values.size() != static_cast<std::size_t>(cells)) {
          throw std::invalid_argument("garnett_jones_average: member shape mismatch");
        }
        double mean = 0.0;
        for (double v : b.values) mean += std::ldexp(v, -depth);
        if (std::fabs(mean) > 1e-10) {
          throw std::invalid_argument("garnett_jones_average: member for alpha " + alphas[j].to_string() +
                                      " has mean " + std::to_string(mean) + " (must be zero)");
        }
        return b.values;
      },
      [&](std::size_t j, const std::vector<double>& b) {
        const std::int64_t a = lattice_cells(alphas[j], depth);
        for (std::int64_t i = 0; i < cells; ++i) {
          const std::int64_t y = i + a;
          if (y >= 0 && y < cells) sum[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(y)];
        }
      });
  for (double& v : sum) v /= static_cast<double>(M);
  AveragedField out{LeafField{1, depth, std::move(sum)}, 0.0};
  out.measured_bmo = sliding_bmo_norm(out.field);
  return out;
}

Decomposition continuous_decompose(const SampledFunction& f, double eps, std::int64_t M) {
  if (!f.compactly_supported()) {
    throw std::invalid_argument("continuous_decompose: f must vanish at 0 and 1 (compact support)");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("continuous_decompose: eps must be positive");
  const int N = f.depth();
  if (N + 2 > SampledFunction::kMaxDepth) throw std::invalid_argument("continuous_decompose: depth too large");
  if (M == 0) M = std::int64_t{1} << N;
  const auto alphas = alpha_lattice(Rational(1), M, N);
  const std::int64_t cells = std::int64_t{1} << N;
  const std::int64_t window = 4 * cells;  // [-1, 3) is a generation -2 dyadic interval

  struct Member {
    std::vector<double> b;  // b^(alpha) on the window grid, original scale
    double t_seminorm = 0.0;
  };
  std::vector<double> sum(static_cast<std::size_t>(cells + 1), 0.0);
  double worst = 0.0;
  ordered_reduce<Member>(
      alphas.size(),
      [&](std::size_t j) {
        const std::int64_t a = lattice_cells(alphas[j], N);
        // h(u) = g(-1 + 4u) / 4 with g(y) = f(y - alpha) keeps slopes and second differences.
        std::vector<double> h(static_cast<std::size_t>(window + 1));
        for (std::int64_t m = 0; m <= window; ++m) h[static_cast<std::size_t>(m)] = std::ldexp(f.at_index(m - cells - a), -2);
        SampledFunction hf(N + 2, std::move(h));
        DyadicMartingale B = truncate_jumps(average_growth(hf), TruncationRule::ibmo(eps));
        SampledFunction bh = integrate(B);
        Member out;
        out.t_seminorm = dyadic_zygmund_seminorm(difference(hf, bh));
        out.b.resize(bh.values().size());
        for (std::size_t m = 0; m < out.b.size(); ++m) out.b[m] = std::ldexp(bh[m], 2);
        return out;
      },
      [&](std::size_t j, const Member& member) {
        const std::int64_t a = lattice_cells(alphas[j], N);
        worst = std::max(worst, member.t_seminorm);
        for (std::int64_t i = 0; i <= cells; ++i) {
          sum[static_cast<std::size_t>(i)] += member.b[static_cast<std::size_t>(i + a + cells)];
        }
      });
  for (double& v : sum) v /= static_cast<double>(M);
  std::vector<double> tv(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) exact_split(f[i], sum[i], tv[i]);
  SampledFunction b(N, std::move(sum));
  SampledFunction t(N, std::move(tv));
  Decomposition out{b, t, eps, M, worst, 0.0, 0.0};
  out.measured_b_seminorm = zygmund_seminorm(out.b);
  out.measured_t_seminorm = zygmund_seminorm(out.t);
  return out;
}

}  // namespace zyg
