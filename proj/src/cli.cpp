#include "zygdist/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zygdist/approximation.hpp"
#include "zygdist/functionals.hpp"
#include "zygdist/generators.hpp"
#include "zygdist/io.hpp"
#include "zygdist/measures.hpp"
#include "zygdist/parallel.hpp"
#include "zygdist/verification.hpp"

namespace zyg {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  std::vector<int> depths;
  std::string eps_grid = "auto";
  double tau = 0.1;
  unsigned threads = 0;
  bool interpolate = false;
  bool timing = false;
  // seminorm
  std::vector<std::string> points;
  // decompose
  std::int64_t lattice = 0;
  // sobolev
  double p = 2.0;
  // verify
  std::string suite = "lemmas";
  std::size_t samples = 10000;
  // generate
  std::string kind;
  int depth = 10;
  int dimension = 1;
  double delta = 0.5;
  int levels = 8;
  double c = 1.0;
  int r = 3;
  std::vector<double> thetas;
};

struct Input {
  std::string digest;
  std::optional<FunctionFile> function;
  std::optional<MeasureFile> measure;
};

Input load_input(const Options& o) {
  if (o.in.empty()) throw InputError("--in: an input file is required");
  Input input;
  const std::string text = read_text(o.in);
  input.digest = fnv1a64(text);
  const Json doc = parse_json(text);
  const std::string format = input_format(doc);
  if (format == kFunctionFormat) {
    input.function = parse_function_file(doc);
  } else if (format == kMeasureFormat) {
    input.measure = parse_measure_file(doc);
  } else {
    throw InputError("format: unknown tag '" + format + "'");
  }
  return input;
}

const SampledFunction& require_function(const Input& input, const char* command) {
  if (!input.function) throw InputError(std::string(command) + ": expects a function file");
  return input.function->function;
}

const GridMeasure& require_measure(const Input& input, const char* command) {
  if (!input.measure) throw InputError(std::string(command) + ": expects a measure file");
  return input.measure->measure;
}

std::vector<int> resolve_depths(const Options& o, int N, int minimum_count) {
  std::vector<int> depths = o.depths;
  if (depths.empty()) {
    for (int d : {N - 4, N - 2, N}) {
      if (d >= 1) depths.push_back(d);
    }
  }
  std::sort(depths.begin(), depths.end());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  for (int d : depths) {
    if (d < 1 || d > N) {
      throw InputError("--depths: every depth must lie in [1, " + std::to_string(N) + "], got " + std::to_string(d));
    }
  }
  if (static_cast<int>(depths.size()) < minimum_count) {
    throw InputError("--depths: at least " + std::to_string(minimum_count) + " distinct depths required");
  }
  return depths;
}

std::vector<double> resolve_eps(const Options& o, double scale) {
  if (o.eps_grid == "auto") return auto_eps_grid(scale);
  std::vector<double> out;
  std::stringstream ss(o.eps_grid);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--eps-grid: '" + item + "' is not a number");
    }
    if (!(v > 0.0) || !std::isfinite(v)) throw InputError("--eps-grid: every eps must be positive and finite");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("--eps-grid: empty grid");
  std::sort(out.begin(), out.end());
  return out;
}

Json eps_method(const Options& o, double scale) {
  if (o.eps_grid == "auto") return Json{{"grid", "auto"}, {"scale", scale}, {"rule", "scale * 2^(-10 + k/2), k = 0..22"}};
  return Json{{"grid", "list"}};
}

Json seminorm_results(const Input& input, const Options& o) {
  Json res;
  if (input.measure) {
    const GridMeasure& mu = input.measure->measure;
    res["dimension"] = mu.dimension();
    res["depth"] = mu.depth();
    res["total_mass"] = mu.total_mass();
    res["dyadic_norm"] = tagged(measure_zygmund_norm(mu, MeasureNormMode::Dyadic),
                                Json{{"rule", "max delta2_max over dyadic cubes"}, {"depth", mu.depth()}});
    const double work = std::pow(std::ldexp(1.0, mu.depth() + 1) + 1.0, mu.dimension()) * std::ldexp(1.0, mu.depth());
    if (work <= std::ldexp(1.0, 28)) {
      res["continuous_grid_norm"] =
          tagged(measure_zygmund_norm(mu, MeasureNormMode::ContinuousGrid),
                 Json{{"rule", "max |delta2| over half-grid centres and steps multiple of 2^-N"}, {"depth", mu.depth()}});
    } else {
      res["continuous_grid_norm"] = tagged(NAN, Json{{"rule", "skipped: brute force exceeds 2^28 cube pairs"}});
    }
    return res;
  }
  const SampledFunction& f = input.function->function;
  const DyadicMartingale S = average_growth(f);
  res["depth"] = f.depth();
  res["compactly_supported"] = f.compactly_supported();
  res["zygmund_seminorm"] =
      tagged(zygmund_seminorm(f), Json{{"rule", "max |delta2| over grid x, h with x +- h in [0, 1]"}, {"depth", f.depth()}});
  res["dyadic_zygmund_seminorm"] =
      tagged(dyadic_zygmund_seminorm(f), Json{{"rule", "max |delta2 f(I)| over dyadic I of generation <= N-1"},
                                              {"depth", f.depth()}});
  res["star_norm"] = tagged(star_norm(S), Json{{"rule", "max |dS| over generations 1..N"}, {"depth", f.depth()}});
  res["bmo_norm"] = tagged(bmo_norm(S), Json{{"rule", "dyadic Carleson sums of squared jumps"}, {"depth", f.depth()}});
  if (!o.points.empty()) {
    Json pts = Json::array();
    for (const std::string& spec : o.points) {
      const auto colon = spec.find(':');
      if (colon == std::string::npos) throw InputError("--at: expected X:H, got '" + spec + "'");
      double x = 0.0;
      double h = 0.0;
      try {
        x = std::stod(spec.substr(0, colon));
        h = std::stod(spec.substr(colon + 1));
      } catch (const std::exception&) {
        throw InputError("--at: expected X:H, got '" + spec + "'");
      }
      try {
        pts.push_back(Json{{"x", x}, {"h", h}, {"delta2", delta2(f, x, h, EvalOptions{o.interpolate})}});
      } catch (const DomainError& e) {
        throw InputError(std::string("--at: ") + e.what() + " (use --interpolate for off-grid points)");
      }
    }
    res["points"] = std::move(pts);
    res["interpolate"] = o.interpolate;
  }
  return res;
}

Json strichartz_results(const Input& input, const Options& o) {
  const SampledFunction& f = require_function(input, "strichartz");
  const auto depths = resolve_depths(o, f.depth(), 1);
  std::vector<double> values(depths.size());
  parallel_for(depths.size(), [&](std::size_t j) { values[j] = strichartz_profile_value(f, depths[j]); });
  Json res;
  Json rows = Json::array();
  for (std::size_t j = 0; j < depths.size(); ++j) rows.push_back(Json{{"depth", depths[j]}, {"value", values[j]}});
  res["table"] = std::move(rows);
  res["method"] = Json{{"rule", "sup over dyadic bases of the ln2-weighted box lattice sum of delta2^2"}};
  if (depths.size() >= 2) {
    res["growth_ratio"] = tagged(growth_ratio(depths, values), Json{{"tau", o.tau}});
    res["bounded"] = profile_bounded(depths, values, o.tau);
  }
  return res;
}

Json distance_results(const Input& input, const Options& o, int& exit_code) {
  const SampledFunction& f = require_function(input, "distance-ibmo");
  const auto depths = resolve_depths(o, f.depth(), 3);
  const double scale = dyadic_zygmund_seminorm(f);
  const auto eps = resolve_eps(o, scale);
  const DistanceReport report = dyadic_distance_report(f, eps, depths, o.tau);
  Json res;
  res["eps_grid"] = eps_method(o, scale);
  res["D"] = to_json(report.profile, true);
  res["C"] = to_json(C_profile(f, eps, depths), false);
  Json rows = Json::array();
  for (std::size_t i = 0; i < eps.size(); ++i) {
    rows.push_back(Json{{"eps", eps[i]},
                        {"measured_distance", report.measured_distance[i]},
                        {"approximant_bmo", report.approximant_bmo[i]},
                        {"guarantee_holds", report.measured_distance[i] <= eps[i]}});
  }
  res["truncation"] = Json{{"rows", std::move(rows)},
                           {"method", "dyadic seminorm of f - integrate(truncate_jumps(S, eps/2)), depth " +
                                          std::to_string(f.depth())}};
  if (!report.profile.estimate.conclusive) exit_code = kExitInconclusive;
  return res;
}

Json decompose_results(const Input& input, const Options& o) {
  const SampledFunction& f = require_function(input, "decompose");
  if (!f.compactly_supported()) throw InputError("decompose: values[0] and values[2^N] must be 0 (compact support)");
  const double scale = dyadic_zygmund_seminorm(f);
  const auto eps = resolve_eps(o, scale);
  Json rows = Json::array();
  for (double e : eps) {
    const Decomposition dec = continuous_decompose(f, e, o.lattice);
    bool exact = true;
    for (std::size_t i = 0; i < f.values().size(); ++i) exact = exact && (dec.b[i] + dec.t[i] == f[i]);
    rows.push_back(Json{{"eps", e},
                        {"lattice_size", dec.lattice_size},
                        {"max_member_t_seminorm", dec.max_member_t_seminorm},
                        {"member_guarantee_holds", dec.max_member_t_seminorm <= e},
                        {"b_seminorm", dec.measured_b_seminorm},
                        {"t_seminorm", dec.measured_t_seminorm},
                        {"t_seminorm_over_eps", dec.measured_t_seminorm / e},
                        {"additive_exact", exact}});
  }
  Json res;
  res["eps_grid"] = eps_method(o, scale);
  res["rows"] = std::move(rows);
  res["method"] = Json{{"rule", "midpoint alpha lattice on [-1, 1], per-alpha truncation at eps/2 on the window [-1, 3)"},
                       {"depth", f.depth()},
                       {"seminorm", "max |delta2| over grid x, h with x +- h in [0, 1]"}};
  return res;
}

Json sobolev_results(const Input& input, const Options& o) {
  const SampledFunction& f = require_function(input, "sobolev");
  const DyadicMartingale S = average_growth(f);
  const double star = star_norm(S);
  const double scale = dyadic_zygmund_seminorm(f);
  const auto eps = resolve_eps(o, scale);
  std::vector<Json> rows(eps.size());
  parallel_for(eps.size(), [&](std::size_t i) {
    const DyadicMartingale B = sobolev_truncate(S, eps[i]);
    const LeafField q = truncated_quadratic(S, eps[i]);
    const LeafField qb = quadratic_characteristic(B);
    bool pointwise = true;
    for (std::size_t k = 0; k < q.values.size(); ++k) pointwise = pointwise && qb.values[k] <= star * q.values[k];
    double residual = 0.0;
    for (std::size_t k = 0; k < S.node_count(); ++k) residual = std::max(residual, std::fabs(S.jumps()[k] - B.jumps()[k]));
    rows[i] = Json{{"eps", eps[i]},
                   {"lp_truncated_quadratic", lp_norm(q, o.p)},
                   {"lp_quadratic_B", lp_norm(qb, o.p)},
                   {"pointwise_bound_holds", pointwise},
                   {"max_removed_jump", residual},
                   {"removed_jump_bound_holds", residual <= eps[i]}};
  });
  Json res;
  res["eps_grid"] = eps_method(o, scale);
  res["star_norm"] = star;
  res["rows"] = rows;
  res["method"] = Json{{"rule", "keep dS(I) when |dS(I)| > eps"}, {"p", o.p}, {"depth", f.depth()}};
  return res;
}

Json measure_results(const Input& input, const Options& o, int& exit_code) {
  const GridMeasure& mu = require_measure(input, "measure");
  const auto depths = resolve_depths(o, mu.depth(), 3);
  const DyadicMartingale S = density_martingale(mu);
  const double norm = star_norm(S);
  const auto eps = resolve_eps(o, norm);
  DistanceProfile D = D_measure_profile(mu, eps, depths);
  D.estimate = estimate_threshold(D, o.tau);
  Json res;
  res["eps_grid"] = eps_method(o, norm);
  res["dyadic_norm"] = tagged(norm, Json{{"rule", "max delta2_max over dyadic cubes"}, {"depth", mu.depth()}});
  res["D"] = to_json(D, true);
  res["C"] = to_json(C_measure_profile(mu, eps, depths), false);
  std::vector<Json> rows(eps.size());
  const DyadicCube root{0, std::vector<std::int64_t>(static_cast<std::size_t>(mu.dimension()), 0)};
  parallel_for(eps.size(), [&](std::size_t i) {
    const DyadicMartingale B = truncate_jumps(S, TruncationRule::parent_max(eps[i]));
    const GridMeasure nu = GridMeasure::from_density(B.leaves());
    const double residual = star_norm(density_martingale(mu - nu));
    const double bmo2 = bmo_norm_squared(B);
    const double bound = norm * norm * D_measure(mu, eps[i], mu.depth());
    rows[i] = Json{{"eps", eps[i]},
                   {"max_residual_delta2_max", residual},
                   {"guarantee_holds", residual <= eps[i]},
                   {"bmo_squared", bmo2},
                   {"bmo_bound", bound},
                   {"bmo_bound_holds", bmo2 <= bound},
                   {"ibmo_functional_root", ibmo_measure_functional(nu, root, mu.depth())}};
  });
  res["truncation"] = Json{{"rows", rows}, {"method", "keep children jumps of Q when delta2_max(Q) > eps"}};
  if (!D.estimate.conclusive) exit_code = kExitInconclusive;
  return res;
}

Json verify_results(const Input* input, const Options& o) {
  Json res;
  const std::size_t n = o.samples;
  if (input != nullptr) {
    if (input->function) {
      const SampledFunction& f = input->function->function;
      res["modulus_1d"] = to_json(verify_modulus_1d(f, n, o.seed));
      res["equal_step"] = to_json(verify_equal_step(f, n, o.seed));
      res["equal_centre"] = to_json(verify_equal_centre(f, n, o.seed));
      res["first_diff"] = to_json(verify_first_diff(f, n, o.seed));
      res["dyadic_distance"] = to_json(verify_dyadic_distance_bound(f, std::min(6, f.depth())));
    } else {
      res["measure_modulus"] = to_json(verify_measure_modulus(input->measure->measure, n, o.seed));
    }
    return res;
  }
  const bool all = o.suite == "all";
  if (!all && o.suite != "lemmas" && o.suite != "predecessor" && o.suite != "bdg" && o.suite != "consistency") {
    throw InputError("--suite: expected lemmas, predecessor, bdg, consistency or all");
  }
  if (all || o.suite == "lemmas") {
    Json lemmas = Json::array();
    for (const auto& c : lemma_function_suite(16, o.seed)) {
      lemmas.push_back(Json{{"input", c.name},
                            {"reports", Json::array({to_json(verify_modulus_1d(c.f, n, o.seed)),
                                                     to_json(verify_equal_step(c.f, n, o.seed)),
                                                     to_json(verify_equal_centre(c.f, n, o.seed)),
                                                     to_json(verify_first_diff(c.f, n, o.seed))})}});
    }
    for (const auto& m : lemma_measure_suite(12, o.seed)) {
      lemmas.push_back(Json{{"input", m.name}, {"reports", Json::array({to_json(verify_measure_modulus(m.mu, n, o.seed))})}});
    }
    res["lemmas"] = std::move(lemmas);
    Json distance = Json::array();
    for (std::uint64_t s = 0; s < 20; ++s) {
      const SampledFunction f = integrate(random_dyadic_martingale(1, 8, o.seed + s));
      distance.push_back(to_json(verify_dyadic_distance_bound(f, 6)));
    }
    res["dyadic_distance"] = std::move(distance);
  }
  if (all || o.suite == "predecessor") {
    Json rows = Json::array();
    for (int R : {1, 2, 4}) {
      rows.push_back(to_json(verify_predecessor_measure(RealInterval{Rational(3, 10), Rational(4, 10)}, Rational(R), 1,
                                                        10, n, o.seed)));
    }
    res["predecessor"] = std::move(rows);
  }
  if (all || o.suite == "bdg") {
    std::vector<DyadicMartingale> ensemble;
    for (std::uint64_t s = 0; s < 100; ++s) ensemble.push_back(random_dyadic_martingale(1, 10, o.seed + s));
    res["bdg"] = to_json(verify_bdg(ensemble, 2.0));
  }
  if (all || o.suite == "consistency") {
    const std::vector<double> eps{0.125, 0.25, 0.375, 0.5, 0.75, 1.0};
    res["consistency"] = to_json(verify_strichartz_consistency(consistency_suite(10, o.seed), eps, {6, 8, 10}, o.tau));
  }
  return res;
}

Json generate_file(const Options& o) {
  Json meta;
  meta["generator"] = o.kind;
  meta["seed"] = o.seed;
  Json params;
  auto fn = [&](SampledFunction f, const std::string& classification) {
    meta["params"] = params;
    meta["classification"] = classification;
    return function_file_json(f, meta);
  };
  const int N = o.depth;
  if (o.kind == "linear") return fn(linear_function(N), "in I(BMO): every profile vanishes");
  if (o.kind == "hat") return fn(hat_function(N), "in I(BMO): a single kink, bounded profiles");
  if (o.kind == "square") return fn(square_function(N), "in I(BMO): smooth, bounded profiles");
  if (o.kind == "weierstrass") {
    params["levels"] = o.levels;
    return fn(weierstrass_function(N, o.levels), "Zygmund class with second differences of order one at every level");
  }
  if (o.kind == "random-jumps") {
    params["delta"] = o.delta;
    return fn(random_jumps_function(N, o.delta, o.seed),
              "dyadic distance oracle 2 delta: D profile equals the depth below 2 delta and vanishes from 2 delta on");
  }
  if (o.kind == "single-branch") {
    params["delta"] = o.delta;
    return fn(single_branch_function(N, o.delta), "bounded D profile for every eps: threshold at the grid minimum");
  }
  if (o.kind == "lacunary") {
    params["c"] = o.c;
    params["r"] = o.r;
    return fn(lacunary_function(N, o.c, o.r), "compactly supported Zygmund function with lacunary oscillation");
  }
  if (o.kind == "cascade") {
    std::vector<double> thetas = o.thetas;
    if (thetas.empty()) thetas.assign(static_cast<std::size_t>(N), 0.25);
    params["dimension"] = o.dimension;
    params["thetas"] = thetas;
    meta["params"] = params;
    meta["classification"] =
        "grid Zygmund measure; a theta on every level makes D_measure grow with depth below the per-node difference";
    return measure_file_json(cascade_measure(o.dimension, N, thetas, o.seed), meta);
  }
  throw InputError("--kind: unknown generator '" + o.kind + "'");
}

void add_common(CLI::App* sub, Options& o, bool with_profile) {
  sub->add_option("--in", o.in, "Input function or measure file");
  sub->add_option("--out", o.out, "Report path (default stdout)");
  sub->add_option("--seed", o.seed, "Seed");
  sub->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
  sub->add_flag("--timing", o.timing, "Include wall time in the report");
  if (with_profile) {
    sub->add_option("--depths", o.depths, "Comma-separated depths")->delimiter(',');
    sub->add_option("--eps-grid", o.eps_grid, "auto or comma-separated eps values");
    sub->add_option("--tau", o.tau, "Stabilization threshold")->check(CLI::PositiveNumber);
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Distance estimates to I(BMO) for Zygmund functions and measures"};
  app.require_subcommand(1);
  auto* seminorm = app.add_subcommand("seminorm", "Zygmund seminorms of a function or measure");
  add_common(seminorm, o, false);
  seminorm->add_option("--at", o.points, "Evaluate delta2 at X:H (repeatable)");
  seminorm->add_flag("--interpolate", o.interpolate, "Interpolate off-grid evaluation points");
  auto* strichartz = app.add_subcommand("strichartz", "Strichartz box profile over depths");
  add_common(strichartz, o, true);
  auto* distance = app.add_subcommand("distance-ibmo", "Dyadic distance profile and threshold estimate");
  add_common(distance, o, true);
  auto* decompose = app.add_subcommand("decompose", "Averaged decomposition f = b + t per eps");
  add_common(decompose, o, true);
  decompose->add_option("--lattice", o.lattice, "Alpha lattice size (0 = 2^N)");
  auto* sobolev = app.add_subcommand("sobolev", "Sobolev-side truncation per eps");
  add_common(sobolev, o, true);
  sobolev->add_option("--p", o.p, "Exponent, 1 < p < infinity");
  auto* measure = app.add_subcommand("measure", "Measure profiles and truncation");
  add_common(measure, o, true);
  auto* verify = app.add_subcommand("verify", "Lemma verification suites");
  add_common(verify, o, false);
  verify->add_option("--suite", o.suite, "lemmas, predecessor, bdg, consistency or all");
  verify->add_option("--samples", o.samples, "Samples per sampled check")->check(CLI::PositiveNumber);
  verify->add_option("--tau", o.tau, "Stabilization threshold")->check(CLI::PositiveNumber);
  auto* generate = app.add_subcommand("generate", "Write a synthetic function or measure file");
  generate->add_option("--kind", o.kind, "linear, hat, square, weierstrass, random-jumps, single-branch, lacunary, cascade")
      ->required();
  generate->add_option("--depth", o.depth, "Depth N");
  generate->add_option("--seed", o.seed, "Seed");
  generate->add_option("--out", o.out, "Output path (default stdout)");
  generate->add_option("--dimension", o.dimension, "Cascade dimension");
  generate->add_option("--delta", o.delta, "Jump size");
  generate->add_option("--levels", o.levels, "Weierstrass levels");
  generate->add_option("--c", o.c, "Lacunary amplitude");
  generate->add_option("--r", o.r, "Lacunary ratio");
  generate->add_option("--thetas", o.thetas, "Cascade theta per level")->delimiter(',');

  std::vector<char*> argv;
  std::vector<std::string> storage(args);
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int exit_code = kExitOk;
  try {
    set_thread_count(o.threads);
    if (generate->parsed()) {
      const std::string text = dump(generate_file(o));
      if (o.out.empty()) {
        out << text;
      } else {
        write_text(o.out, text);
      }
      return kExitOk;
    }
    Json report;
    report["schema_version"] = kSchemaVersion;
    Json command;
    CLI::App* sub = app.get_subcommands().front();
    command["subcommand"] = sub->get_name();
    command["args"] = std::vector<std::string>(args.begin() + 1, args.end());
    report["command"] = command;
    std::optional<Input> input;
    if (!o.in.empty() || !verify->parsed()) input = load_input(o);
    report["input_digest"] = input ? Json(input->digest) : Json(nullptr);
    Json results;
    if (sub == seminorm) results = seminorm_results(*input, o);
    if (sub == strichartz) results = strichartz_results(*input, o);
    if (sub == distance) results = distance_results(*input, o, exit_code);
    if (sub == decompose) results = decompose_results(*input, o);
    if (sub == sobolev) results = sobolev_results(*input, o);
    if (sub == measure) results = measure_results(*input, o, exit_code);
    if (sub == verify) results = verify_results(input ? &*input : nullptr, o);
    report["results"] = std::move(results);
    if (o.timing) {
      report["wall_time_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    const std::string text = dump(report);
    if (o.out.empty()) {
      out << text;
    } else {
      write_text(o.out, text);
    }
    if (exit_code == kExitInconclusive) err << "threshold estimate inconclusive: the largest eps row is unbounded\n";
    return exit_code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace zyg
