#include "zygdist/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zygdist/functionals.hpp"
#include "zygdist/generators.hpp"
#include "zygdist/parallel.hpp"

namespace zyg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kNormDepth = 10;

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo * std::exp(unit_uniform(rng) * std::log(hi / lo));
}

double snap(double v, int depth) { return std::ldexp(std::nearbyint(std::ldexp(v, depth)), -depth); }

enum class Kind { Modulus, EqualStep, EqualCentre, FirstDiff };

struct Draw {
  double x = 0.0;
  double gap = 0.0;   // h' - h (unused for FirstDiff)
  double dist = 0.0;  // |x - t|
  double step = 0.0;  // h' (h for FirstDiff)
  double sign = 1.0;
};

Draw draw_tuple(Kind kind, std::mt19937_64& rng, double unit) {
  Draw d;
  d.sign = (rng() >> 63) ? 1.0 : -1.0;
  if (kind == Kind::FirstDiff) {
    d.step = log_uniform(rng, unit, 0.25);
    d.dist = log_uniform(rng, d.step / 2.0 + unit, 0.5);
    const double span = 1.0 - d.dist - d.step;
    d.x = unit_uniform(rng) * span;  // left end of the leftmost window
    return d;
  }
  d.step = log_uniform(rng, 4.0 * unit, 0.25);
  d.gap = kind == Kind::EqualStep ? 0.0 : log_uniform(rng, unit, d.step / 2.0);
  d.dist = kind == Kind::EqualCentre ? 0.0 : log_uniform(rng, unit, d.step / 2.0);
  const double lo = d.step + d.dist;
  d.x = lo + unit_uniform(rng) * (1.0 - 2.0 * lo);
  return d;
}

struct Evaluated {
  double ratio = kNaN;
  std::string witness;
};

Evaluated evaluate_tuple(Kind kind, const SampledFunction& f, double norm, const Draw& d, bool want_witness) {
  const int D = f.depth();
  Evaluated out;
  auto ratio_of = [&](double num, double denom) {
    if (num == 0.0) return 0.0;
    return num / (norm * denom);
  };
  if (kind == Kind::FirstDiff) {
    const double h = snap(d.step, D);
    const double dist = snap(d.dist, D);
    const double left = snap(d.x, D);
    if (!(h > 0.0) || !(dist > h / 2.0) || left < 0.0 || left + dist + h > 1.0) return out;
    const double x = d.sign > 0 ? left : left + dist;
    const double t = d.sign > 0 ? left + dist : left;
    const double num = std::fabs(delta1(f, x, h) - delta1(f, t, h));
    out.ratio = ratio_of(num, std::log(dist / h + 1.0));
    if (want_witness) {
      std::ostringstream w;
      w << "x=" << x << " t=" << t << " h=" << h;
      out.witness = w.str();
    }
    return out;
  }
  const double hp = snap(d.step, D);
  const double h = hp - snap(d.gap, D);
  const double x = snap(d.x, D);
  const double t = x + d.sign * snap(d.dist, D);
  const double dist = std::fabs(x - t);
  if (!(h > 0.0) || !(dist < hp / 2.0) || (h == hp && dist == 0.0)) return out;
  if (x - h < 0.0 || x + h > 1.0 || t - hp < 0.0 || t + hp > 1.0) return out;
  const double num = std::fabs(delta2(f, x, h) - delta2(f, t, hp));
  double bracket = 0.0;
  if (hp > h) {
    const double g = (hp - h) / hp;
    bracket += g * (1.0 + std::log(1.0 / g));
  }
  if (dist > 0.0) bracket += (dist / hp) * std::log(hp / dist + 1.0);
  out.ratio = ratio_of(num, bracket);
  if (want_witness) {
    std::ostringstream w;
    w << "x=" << x << " h=" << h << " t=" << t << " h'=" << hp;
    out.witness = w.str();
  }
  return out;
}

void finish(RatioReport& r, const std::vector<double>& coarse, const std::vector<double>& fine) {
  std::size_t best = fine.size();
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    if (!std::isnan(coarse[i])) {
      ++r.admissible_coarse;
      r.max_ratio_coarse = std::max(r.max_ratio_coarse, coarse[i]);
    }
    if (!std::isnan(fine[i])) {
      ++r.admissible_fine;
      if (best == fine.size() || fine[i] > fine[best]) best = i;
    }
  }
  if (best != fine.size()) r.max_ratio_fine = fine[best];
  if (r.admissible_coarse == 0 || r.admissible_fine == 0) {
    throw std::runtime_error(r.name + ": no admissible samples (degenerate sample set)");
  }
  if (r.max_ratio_coarse == 0.0 && r.max_ratio_fine == 0.0) {
    r.stability = 1.0;
  } else if (r.max_ratio_coarse == 0.0) {
    r.stability = std::numeric_limits<double>::infinity();
  } else {
    r.stability = r.max_ratio_fine / r.max_ratio_coarse;
  }
}

RatioReport run_function_lemma(Kind kind, const char* name, const SampledFunction& f, std::size_t samples,
                               std::uint64_t seed) {
  const int N = f.depth();
  if (N < 4) throw std::invalid_argument(std::string(name) + ": depth must be >= 4");
  if (samples == 0) throw std::invalid_argument(std::string(name) + ": samples must be positive");
  RatioReport r;
  r.name = name;
  r.seed = seed;
  r.samples = samples;
  r.coarse_depth = N / 2;
  r.fine_depth = N;
  r.norm = zygmund_seminorm(restrict_to(f, std::min(N, kNormDepth)));
  const SampledFunction coarse_f = restrict_to(f, r.coarse_depth);
  const double unit = std::ldexp(1.0, -r.coarse_depth);
  std::vector<double> coarse(samples), fine(samples);
  parallel_for(samples, [&](std::size_t i) {
    std::mt19937_64 rng = stream_engine(seed, i);
    const Draw d = draw_tuple(kind, rng, unit);
    coarse[i] = evaluate_tuple(kind, coarse_f, r.norm, d, false).ratio;
    fine[i] = evaluate_tuple(kind, f, r.norm, d, false).ratio;
  });
  finish(r, coarse, fine);
  for (std::size_t i = 0; i < samples; ++i) {
    if (fine[i] == r.max_ratio_fine) {
      std::mt19937_64 rng = stream_engine(seed, i);
      r.argmax = "sample " + std::to_string(i) + ": " + evaluate_tuple(kind, f, r.norm, draw_tuple(kind, rng, unit), true).witness;
      break;
    }
  }
  return r;
}

}  // namespace

RatioReport verify_modulus_1d(const SampledFunction& f, std::size_t samples, std::uint64_t seed) {
  return run_function_lemma(Kind::Modulus, "modulus_1d", f, samples, seed);
}

RatioReport verify_equal_step(const SampledFunction& f, std::size_t samples, std::uint64_t seed) {
  return run_function_lemma(Kind::EqualStep, "equal_step", f, samples, seed);
}

RatioReport verify_equal_centre(const SampledFunction& f, std::size_t samples, std::uint64_t seed) {
  return run_function_lemma(Kind::EqualCentre, "equal_centre", f, samples, seed);
}

RatioReport verify_first_diff(const SampledFunction& f, std::size_t samples, std::uint64_t seed) {
  return run_function_lemma(Kind::FirstDiff, "first_diff", f, samples, seed);
}

DyadicDistanceReport verify_dyadic_distance_bound(const SampledFunction& f, int depth) {
  if (depth < 0 || depth > 6 || depth > f.depth()) {
    throw std::invalid_argument("verify_dyadic_distance_bound: depth must lie in [0, min(6, N)]");
  }
  DyadicDistanceReport r;
  r.depth = depth;
  r.norm = dyadic_zygmund_seminorm(f);
  std::vector<DyadicInterval> intervals;
  std::vector<double> slopes;
  for (int g = 0; g <= depth; ++g) {
    const std::int64_t stride = std::int64_t{1} << (f.depth() - g);
    for (std::int64_t k = 0; k < (std::int64_t{1} << g); ++k) {
      intervals.push_back({g, k});
      slopes.push_back(std::ldexp(f.at_index((k + 1) * stride) - f.at_index(k * stride), g));
    }
  }
  const std::size_t n = intervals.size();
  std::vector<double> best(n, 0.0);
  std::vector<std::size_t> partner(n, 0);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double num = std::fabs(slopes[i] - slopes[j]);
      if (num == 0.0) continue;
      const double ratio = num / (r.norm * dyadic_distance(intervals[i], intervals[j]));
      if (ratio > best[i]) {
        best[i] = ratio;
        partner[i] = j;
      }
    }
  });
  r.pairs = n * (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i] > r.max_ratio) {
      r.max_ratio = best[i];
      r.argmax_first = intervals[i];
      r.argmax_second = intervals[partner[i]];
    }
  }
  return r;
}

PredecessorReport verify_predecessor_measure(const RealInterval& I, const Rational& R, int k_min, int k_max,
                                             std::size_t samples, std::uint64_t seed) {
  if (R < Rational(1)) throw std::invalid_argument("verify_predecessor_measure: R must be >= 1");
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("verify_predecessor_measure: need 1 <= k_min <= k_max");
  if (samples == 0) throw std::invalid_argument("verify_predecessor_measure: samples must be positive");
  constexpr int kAlphaBits = 40;
  const Rational scaled = R * Rational::dyadic(1, -kAlphaBits);
  if (!scaled.is_integer()) throw std::invalid_argument("verify_predecessor_measure: R must be a multiple of 2^-40");
  PredecessorReport r{I, R, scale_generation(I.length()), -scale_generation(R), samples, seed, {}, 0.0, false};
  const RealInterval neighbour{I.left - I.length(), I.left};
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(scaled.num());
  std::vector<int> ks(samples);
  parallel_for(samples, [&](std::size_t i) {
    std::mt19937_64 rng = stream_engine(seed, i);
    const std::int64_t k = static_cast<std::int64_t>(rng() % span) - scaled.num();
    const Filtration alpha{Rational::dyadic(k, kAlphaBits)};
    ks[i] = r.N - common_predecessor(neighbour, I, alpha).generation;
  });
  const double n = static_cast<double>(samples);
  const double width = 2.0 * R.to_double();
  r.pass = true;
  for (int k = k_min; k <= k_max; ++k) {
    PredecessorRow row;
    row.k = k;
    row.count = static_cast<std::size_t>(std::count(ks.begin(), ks.end(), k));
    const double p = static_cast<double>(row.count) / n;
    row.estimate = width * p;
    row.standard_error = width * std::sqrt(p * (1.0 - p) / n);
    row.bound = std::ldexp(1.0, r.M + 1 - k + 2);
    // Relative standard error keeps 1 + 3 SE dimensionless.
    const double relative_se = row.estimate > 0.0 ? row.standard_error / row.estimate : 0.0;
    row.pass = row.estimate <= row.bound * (1.0 + 3.0 * relative_se);
    r.pass = r.pass && row.pass;
    r.total += row.estimate;
    r.rows.push_back(row);
  }
  return r;
}

BdgReport verify_bdg(const std::vector<DyadicMartingale>& ensemble, double p) {
  BdgReport r;
  r.p = p;
  r.min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& S : ensemble) {
    const double q = lp_norm(quadratic_characteristic(S), p);
    if (q == 0.0) {
      ++r.skipped;
      continue;
    }
    const double ratio = lp_norm(maximal_function(S), p) / q;
    r.ratios.push_back(ratio);
    r.min_ratio = std::min(r.min_ratio, ratio);
    r.max_ratio = std::max(r.max_ratio, ratio);
    if (p == 2.0 && !(ratio >= 1.0 && ratio <= 2.0)) r.pass = false;
  }
  if (r.ratios.empty()) r.min_ratio = 0.0;
  return r;
}

ConsistencyReport verify_strichartz_consistency(const std::vector<NamedFunction>& suite, const std::vector<double>& eps,
                                                const std::vector<int>& depths, double tau) {
  ConsistencyReport report{eps, depths, tau, {}, 0};
  for (const auto& c : suite) {
    ConsistencyRow row;
    row.name = c.name;
    std::vector<double> strichartz(depths.size());
    parallel_for(depths.size(), [&](std::size_t j) { strichartz[j] = strichartz_profile_value(c.f, depths[j]); });
    row.strichartz_bounded = profile_bounded(depths, strichartz, tau);
    const DistanceProfile C = C_profile(c.f, eps, depths);
    const DistanceProfile D = D_profile(c.f, eps, depths);
    bool all_c = true;
    bool all_d = true;
    for (std::size_t i = 0; i < eps.size(); ++i) {
      row.c_bounded.push_back(profile_bounded(depths, C.values[i], tau));
      row.d_bounded.push_back(profile_bounded(depths, D.values[i], tau));
      all_c = all_c && row.c_bounded.back();
      all_d = all_d && row.d_bounded.back();
      if (row.c_bounded.back() != row.d_bounded.back()) ++row.mismatches;
    }
    if (row.strichartz_bounded != all_c) ++row.mismatches;
    if (row.strichartz_bounded != all_d) ++row.mismatches;
    report.mismatches += row.mismatches;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

int measure_norm_depth(int dimension) { return dimension == 1 ? 10 : dimension == 2 ? 6 : 4; }

struct MeasureDraw {
  std::vector<double> x;
  std::vector<double> offset;
  double h = 0.0;
  double gap = 0.0;
};

double measure_ratio(const GridMeasure& mu, double norm, const MeasureDraw& d, std::string* witness) {
  const int D = mu.depth();
  const int dim = mu.dimension();
  const double h = snap(d.h, D);
  const double hp = h + snap(d.gap, D);
  std::vector<double> x(dim), t(dim);
  double dist2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    x[i] = snap(d.x[i], D + 1);
    t[i] = x[i] + snap(d.offset[i], D + 1);
    dist2 += (t[i] - x[i]) * (t[i] - x[i]);
    if (x[i] - h < 0.0 || x[i] + h > 1.0 || t[i] - hp < 0.0 || t[i] + hp > 1.0) return kNaN;
  }
  const double dist = std::sqrt(dist2);
  if (!(h > 0.0) || !(dist < h / 2.0) || (hp == h && dist == 0.0)) return kNaN;
  const double num = std::fabs(delta2_measure(mu, x, h) - delta2_measure(mu, t, hp));
  double bracket = 0.0;
  if (hp > h) {
    const double g = (hp - h) / h;
    bracket += g * (1.0 + std::log(1.0 / g + 1.0));
  }
  if (dist > 0.0) bracket += (dist / h) * std::log(h / dist + 1.0);
  if (witness) {
    std::ostringstream w;
    w << "x=(";
    for (int i = 0; i < dim; ++i) w << (i ? "," : "") << x[i];
    w << ") t=(";
    for (int i = 0; i < dim; ++i) w << (i ? "," : "") << t[i];
    w << ") h=" << h << " h'=" << hp;
    *witness = w.str();
  }
  if (num == 0.0) return 0.0;
  return num / (norm * bracket);
}

MeasureDraw draw_measure(std::mt19937_64& rng, int dim, double unit) {
  MeasureDraw d;
  d.h = log_uniform(rng, 2.0 * unit, 0.125);
  d.gap = log_uniform(rng, unit, d.h / 2.0);
  const double dist = log_uniform(rng, unit / 2.0, d.h / 2.0);
  d.offset.resize(dim);
  double norm2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    d.offset[i] = 2.0 * unit_uniform(rng) - 1.0;
    norm2 += d.offset[i] * d.offset[i];
  }
  const double scale = norm2 > 0.0 ? dist / std::sqrt(norm2) : 0.0;
  for (double& o : d.offset) o *= scale;
  const double reach = d.h + d.gap + dist;
  d.x.resize(dim);
  for (int i = 0; i < dim; ++i) d.x[i] = reach + unit_uniform(rng) * (1.0 - 2.0 * reach);
  return d;
}

}  // namespace

RatioReport verify_measure_modulus(const GridMeasure& mu, std::size_t samples, std::uint64_t seed) {
  const int N = mu.depth();
  if (N < 4) throw std::invalid_argument("verify_measure_modulus: depth must be >= 4");
  if (samples == 0) throw std::invalid_argument("verify_measure_modulus: samples must be positive");
  RatioReport r;
  r.name = "measure_modulus";
  r.seed = seed;
  r.samples = samples;
  r.coarse_depth = N / 2;
  r.fine_depth = N;
  r.norm = measure_zygmund_norm(coarsen(mu, std::min(N, measure_norm_depth(mu.dimension()))),
                                MeasureNormMode::ContinuousGrid);
  const GridMeasure coarse_mu = coarsen(mu, r.coarse_depth);
  const double unit = std::ldexp(1.0, -r.coarse_depth);
  std::vector<double> coarse(samples), fine(samples);
  parallel_for(samples, [&](std::size_t i) {
    std::mt19937_64 rng = stream_engine(seed, i);
    const MeasureDraw d = draw_measure(rng, mu.dimension(), unit);
    coarse[i] = measure_ratio(coarse_mu, r.norm, d, nullptr);
    fine[i] = measure_ratio(mu, r.norm, d, nullptr);
  });
  finish(r, coarse, fine);
  for (std::size_t i = 0; i < samples; ++i) {
    if (fine[i] == r.max_ratio_fine) {
      std::mt19937_64 rng = stream_engine(seed, i);
      std::string w;
      measure_ratio(mu, r.norm, draw_measure(rng, mu.dimension(), unit), &w);
      r.argmax = "sample " + std::to_string(i) + ": " + w;
      break;
    }
  }
  return r;
}

std::vector<NamedFunction> lemma_function_suite(int depth, std::uint64_t seed) {
  std::vector<NamedFunction> out;
  out.push_back({"hat", hat_function(depth)});
  out.push_back({"square", square_function(depth)});
  out.push_back({"weierstrass", weierstrass_function(depth, 8)});
  out.push_back({"random_jumps", refine(random_jumps_function(std::min(depth, 8), 0.5, seed), depth)});
  out.push_back({"lacunary", lacunary_function(depth, 1.0, 3)});
  return out;
}

std::vector<NamedMeasure> lemma_measure_suite(int depth, std::uint64_t seed) {
  std::vector<NamedMeasure> out;
  out.push_back({"cascade_d1", cascade_measure(1, depth, std::vector<double>(static_cast<std::size_t>(depth / 2), 0.25), seed)});
  const int d2 = depth / 2;
  out.push_back({"cascade_d2", cascade_measure(2, d2, std::vector<double>(static_cast<std::size_t>(d2 / 2), 0.25), seed)});
  out.push_back({"root_split_d1", cascade_measure(1, depth, {0.5}, seed)});
  return out;
}

std::vector<NamedFunction> consistency_suite(int depth, std::uint64_t seed) {
  std::vector<NamedFunction> out;
  out.push_back({"linear", linear_function(depth)});
  out.push_back({"hat", hat_function(depth)});
  out.push_back({"square", square_function(depth)});
  out.push_back({"random_jumps", random_jumps_function(depth, 0.25, seed)});
  return out;
}

}  // namespace zyg
