// One pass/fail line per acceptance criterion; exit status counts failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zygdist/approximation.hpp"
#include "zygdist/functionals.hpp"
#include "zygdist/generators.hpp"
#include "zygdist/measures.hpp"
#include "zygdist/verification.hpp"

using namespace zyg;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("[%s] criterion %d %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

SampledFunction minus(const SampledFunction& a, const SampledFunction& b) {
  std::vector<double> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return SampledFunction(a.depth(), std::move(v));
}

std::vector<DyadicMartingale> random_martingales(std::size_t count, int depth) {
  std::vector<DyadicMartingale> out;
  for (std::uint64_t s = 0; s < count; ++s) out.push_back(random_dyadic_martingale(1, depth, 1000 + s));
  return out;
}

// Function suite shared by the tree criteria.
std::vector<NamedFunction> tree_suite(int N) {
  return {{"hat", hat_function(N)},
          {"square", square_function(N)},
          {"random_jumps", random_jumps_function(N, 0.5, 7)},
          {"single_branch", single_branch_function(N, 1.0)},
          {"lacunary", lacunary_function(N, 1.0, 3)},
          {"weierstrass", weierstrass_function(N, 8)}};
}

Outcome criterion1() {
  const double delta = 0.5;
  bool ok = true;
  double worst_time = 0.0;
  std::string detail;
  for (int N : {8, 10, 12}) {
    const auto t0 = std::chrono::steady_clock::now();
    const SampledFunction f = random_jumps_function(N, delta, 42);
    const auto eps = auto_eps_grid(dyadic_zygmund_seminorm(f));
    const std::vector<int> depths{N - 4, N - 2, N};
    const DistanceProfile p = D_profile(f, eps, depths);
    const ThresholdEstimate est = estimate_threshold(p);
    worst_time = std::max(worst_time, seconds_since(t0));
    for (std::size_t i = 0; i < eps.size(); ++i) {
      const double expect = eps[i] < 2 * delta ? static_cast<double>(N) : 0.0;
      if (p.values[i].back() != expect) ok = false;
    }
    // Adjacent grid values differ by a factor sqrt(2).
    const bool within = est.conclusive && std::fabs(std::log2(est.eps / (2 * delta))) <= 0.5 + 1e-12;
    ok = ok && within;
    detail += "N=" + std::to_string(N) + " eps0=" + fmt("%g", est.eps) + " ";
  }
  ok = ok && worst_time <= 5.0;
  return {ok, detail + "oracle 2delta=1, max runtime " + fmt("%.3f s (limit 5 s)", worst_time)};
}

Outcome criterion2() {
  bool ok = true;
  double worst = 0.0;
  std::size_t checks = 0;
  for (const DyadicMartingale& S : random_martingales(100, 10)) {
    const SampledFunction f = integrate(S);
    for (double eps : auto_eps_grid(dyadic_zygmund_seminorm(f))) {
      const auto rule = TruncationRule::ibmo(eps);
      const DyadicMartingale B = truncate_jumps(S, rule);
      const double dist = dyadic_zygmund_seminorm(minus(f, integrate(B)));
      worst = std::max(worst, dist / eps);
      ok = ok && dist <= eps;
      for (std::size_t k = 1; k < S.node_count(); ++k) {
        if (std::fabs(S.jumps()[k]) > rule.threshold && B.jumps()[k] != S.jumps()[k]) ok = false;
      }
      ++checks;
    }
  }
  return {ok, std::to_string(checks) + " (martingale, eps) pairs, max distance/eps = " + fmt("%.6g", worst)};
}

Outcome criterion3() {
  bool ok = true;
  std::size_t checks = 0;
  double worst = 0.0;
  auto check = [&](const DyadicMartingale& S) {
    const double star = star_norm(S);
    for (double eps : auto_eps_grid(2.0 * star)) {
      const DyadicMartingale B = truncate_jumps(S, TruncationRule::ibmo(eps));
      const double lhs = bmo_norm_squared(B);
      const double rhs = star * star * D_functional(S, eps, S.depth());
      if (rhs > 0.0) worst = std::max(worst, lhs / rhs);
      ok = ok && lhs <= rhs;
      ++checks;
    }
  };
  for (const auto& c : tree_suite(10)) check(average_growth(c.f));
  for (const DyadicMartingale& S : random_martingales(100, 10)) check(S);
  return {ok, std::to_string(checks) + " (input, eps) pairs, max lhs/rhs = " + fmt("%.6g", worst)};
}

Outcome criterion4() {
  double worst = 0.0;
  std::size_t nodes = 0;
  auto check = [&](const DyadicMartingale& S) {
    for (int g = 0; g <= S.depth(); ++g) {
      for (std::size_t i = 0; i < S.level_size(g); ++i) {
        const ParsevalPair p = parseval_pair(S, g, i);
        const double scale = std::max(std::fabs(p.integral), std::fabs(p.jump_sum));
        if (scale > 0.0) worst = std::max(worst, std::fabs(p.integral - p.jump_sum) / scale);
        ++nodes;
      }
    }
  };
  for (const auto& c : tree_suite(10)) check(average_growth(c.f));
  for (const DyadicMartingale& S : random_martingales(20, 10)) check(S);
  for (std::uint64_t s = 0; s < 5; ++s) {
    check(random_dyadic_martingale(2, 5, s));
    check(random_dyadic_martingale(3, 3, s));
  }
  return {worst <= 1e-12, std::to_string(nodes) + " nodes, max relative error " + fmt("%.3g (limit 1e-12)", worst)};
}

Outcome criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const SampledFunction f = integrate(random_dyadic_martingale(1, 10, 2000 + s));
    worst = std::max(worst, verify_dyadic_distance_bound(f, 6).max_ratio);
  }
  const double secs = seconds_since(t0);
  return {worst <= 1.0 && secs <= 10.0,
          "20 functions, max ratio " + fmt("%.6g (limit 1)", worst) + ", runtime " + fmt("%.2f s (limit 10 s)", secs)};
}

Outcome criterion6() {
  bool ok = true;
  std::string detail;
  const std::vector<RealInterval> intervals{RealInterval(Rational(3, 8), Rational(1, 2)),
                                            RealInterval(Rational(3, 10), Rational(2, 5))};
  for (const RealInterval& I : intervals) {
    for (int R : {1, 2, 4}) {
      const PredecessorReport r = verify_predecessor_measure(I, Rational(R), 1, 10, 100000, 6);
      const bool total_ok = std::fabs(r.total - 2.0 * R) <= 0.01 * 2.0 * R;
      ok = ok && r.pass && total_ok;
      detail += "|I|=" + r.interval.length().to_string() + ",R=" + std::to_string(R) + ": total " + fmt("%.4g", r.total) +
                (r.pass ? "" : " BOUND VIOLATED") + "; ";
    }
  }
  return {ok, detail + "k = 1..10, 1e5 samples each"};
}

Outcome criterion7() {
  const BdgReport r = verify_bdg(random_martingales(100, 10), 2.0);
  return {r.pass && r.skipped == 0 && r.ratios.size() == 100,
          "100 martingales, ratio range [" + fmt("%.4f", r.min_ratio) + ", " + fmt("%.4f", r.max_ratio) + "] within [1, 2]"};
}

Outcome criterion8() {
  bool ok = true;
  double worst_stab = 0.0;
  double worst_ratio = 0.0;
  std::size_t reports = 0;
  auto take = [&](const RatioReport& r) {
    ok = ok && std::isfinite(r.max_ratio()) && r.stability <= 1.5;
    worst_stab = std::max(worst_stab, r.stability);
    worst_ratio = std::max(worst_ratio, r.max_ratio());
    ++reports;
  };
  const std::size_t n = 10000;
  const std::uint64_t seed = 8;
  for (const auto& c : lemma_function_suite(16, seed)) {
    take(verify_modulus_1d(c.f, n, seed));
    take(verify_equal_step(c.f, n, seed));
    take(verify_equal_centre(c.f, n, seed));
    take(verify_first_diff(c.f, n, seed));
  }
  for (const auto& m : lemma_measure_suite(12, seed)) take(verify_measure_modulus(m.mu, n, seed));
  return {ok, std::to_string(reports) + " reports (5 functions, 3 measures, 1e4 samples), max ratio " +
                  fmt("%.4g", worst_ratio) + ", max stability " + fmt("%.4f (limit 1.5)", worst_stab)};
}

// Pinned from the reference run; any change in the averaging pipeline shows here.
constexpr double kPinnedAveragingConstant = 0.17463030133928573;

Outcome criterion9() {
  auto constant_at = [](int N) {
    double c = 0.0;
    const std::vector<FunctionFamily> families{hat_family(N), bucketed_jump_family(N, 6, 9), bucketed_jump_family(N, 6, 10)};
    for (const auto& fam : families) {
      for (int R : {1, 2, 4}) c = std::max(c, zygmund_seminorm(translation_average(fam, Rational(R), 0, N)));
    }
    return c;
  };
  const double c9 = constant_at(9);
  const double c10 = constant_at(10);
  const double change = std::fabs(c10 - c9) / c9;
  const bool pinned = std::fabs(c10 - kPinnedAveragingConstant) <= 1e-12 * std::max(1.0, c10);
  return {change <= 0.10 && pinned, "C_rec = " + fmt("%.17g", c10) + " at depth 10, " + fmt("%.6g", c9) +
                                        " at depth 9, change " + fmt("%.4f (limit 0.10)", change) +
                                        (pinned ? ", matches pin" : ", differs from pin")};
}

Outcome criterion10() {
  const int N = 8;
  const std::vector<NamedFunction> suite{{"hat", hat_function(N)},
                                         {"lacunary", lacunary_function(N, 1.0, 3)},
                                         {"random_jumps", random_jumps_function(N, 0.25, 3)},
                                         {"single_branch", single_branch_function(N, 0.5)}};
  bool exact = true;
  bool member = true;
  bool monotone = true;
  std::string detail;
  for (const auto& c : suite) {
    const auto eps = auto_eps_grid(dyadic_zygmund_seminorm(c.f));
    std::vector<double> ratio(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
      const Decomposition d = continuous_decompose(c.f, eps[i]);
      for (std::size_t k = 0; k < c.f.values().size(); ++k) exact = exact && d.b[k] + d.t[k] == c.f[k];
      member = member && d.max_member_t_seminorm <= eps[i];
      ratio[i] = d.measured_t_seminorm / eps[i];
    }
    // Walk eps downwards; each ratio may exceed its predecessor by at most 10%.
    std::string first_violation;
    for (std::size_t i = eps.size() - 1; i-- > 0;) {
      if (ratio[i] > 1.10 * ratio[i + 1] && first_violation.empty()) {
        first_violation = fmt("eps %.4g", eps[i + 1]) + fmt("->%.4g", eps[i]) + fmt(" ratio %.3g", ratio[i + 1]) +
                          fmt("->%.3g", ratio[i]);
      }
    }
    if (!first_violation.empty()) monotone = false;
    detail += c.name + fmt(" max ||t||/eps %.3g", *std::max_element(ratio.begin(), ratio.end())) +
              (first_violation.empty() ? "" : " [increase at " + first_violation + "]") + "; ";
  }
  const ConsistencyReport cons =
      verify_strichartz_consistency(consistency_suite(10, 1), {0.125, 0.25, 0.375, 0.5, 0.75, 1.0}, {6, 8, 10});
  const bool ok = exact && member && monotone && cons.mismatches == 0;
  return {ok, std::string("b+t=f ") + (exact ? "exact" : "NOT exact") + ", member bound " + (member ? "holds" : "VIOLATED") +
                  ", monotone " + (monotone ? "yes" : "NO") + ", consistency mismatches " +
                  std::to_string(cons.mismatches) + "; " + detail};
}

Outcome criterion11() {
  bool pointwise = true;
  std::size_t checks = 0;
  auto check = [&](const DyadicMartingale& S) {
    const double star = star_norm(S);
    for (double eps : auto_eps_grid(2.0 * star)) {
      const LeafField qb = quadratic_characteristic(sobolev_truncate(S, eps));
      const LeafField q = truncated_quadratic(S, eps);
      for (std::size_t i = 0; i < q.values.size(); ++i) pointwise = pointwise && qb.values[i] <= star * q.values[i];
      ++checks;
    }
  };
  for (const auto& c : tree_suite(10)) check(average_growth(c.f));
  for (const DyadicMartingale& S : random_martingales(50, 10)) check(S);

  const int N = 10;
  const double value = lp_norm(truncated_quadratic(single_branch_martingale(N, 1.0), 0.5), 2.0);
  const double target = std::sqrt(static_cast<double>(N)) * std::ldexp(1.0, -N / 2);
  const bool branch = value == target;
  return {pointwise && branch, std::string("pointwise bound ") + (pointwise ? "holds" : "VIOLATED") + " on " +
                                   std::to_string(checks) + " (input, eps) pairs; single-branch lp_norm " +
                                   fmt("%.17g", value) + " vs required sqrt(N)2^(-N/2) = " + fmt("%.17g", target) +
                                   fmt(" (N=%g)", N)};
}

Outcome criterion12() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<GridMeasure> suite;
  for (std::uint64_t s = 0; s < 3; ++s) {
    suite.push_back(cascade_measure(1, 10, std::vector<double>(10, 0.25), s));
    suite.push_back(cascade_measure(1, 10, {0.5, 0.125, 0.5, 0.125}, s));
    suite.push_back(cascade_measure(2, 8, std::vector<double>(8, 0.25), s));
    suite.push_back(cascade_measure(2, 8, {0.5, 0.25}, s));
  }
  bool ok = true;
  double worst = 0.0;
  std::size_t cubes = 0;
  for (const GridMeasure& mu : suite) {
    const int d = mu.dimension();
    const int N = mu.depth();
    for (double eps : auto_eps_grid(measure_zygmund_norm(mu, MeasureNormMode::Dyadic))) {
      const GridMeasure diff = mu - measure_truncate(mu, eps);
      for (int g = 0; g < N; ++g) {
        const std::int64_t side = std::int64_t{1} << g;
        std::vector<std::int64_t> k(static_cast<std::size_t>(d), 0);
        for (std::int64_t flat = 0; flat < (std::int64_t{1} << (d * g)); ++flat) {
          std::int64_t rest = flat;
          for (int a = d - 1; a >= 0; --a) {
            k[static_cast<std::size_t>(a)] = rest % side;
            rest /= side;
          }
          const double v = delta2_max(diff, DyadicCube{g, k});
          worst = std::max(worst, v / eps);
          ok = ok && v <= eps;
          ++cubes;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {ok && secs <= 30.0, std::to_string(suite.size()) + " cascades (d=1 N=10, d=2 N=8), " + std::to_string(cubes) +
                                  " cube checks, max delta2_max/eps " + fmt("%.6g", worst) + ", runtime " +
                                  fmt("%.2f s (limit 30 s)", secs)};
}

}  // namespace

int main() {
  report(1, "constant-jump oracle", criterion1);
  report(2, "truncation guarantee", criterion2);
  report(3, "BMO-side inequality", criterion3);
  report(4, "orthogonality", criterion4);
  report(5, "dyadic distance lemma", criterion5);
  report(6, "common predecessor size", criterion6);
  report(7, "BDG at p=2", criterion7);
  report(8, "modulus lemmas", criterion8);
  report(9, "averaging theorem", criterion9);
  report(10, "end-to-end decomposition", criterion10);
  report(11, "Sobolev pipeline", criterion11);
  report(12, "measure pipeline", criterion12);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
