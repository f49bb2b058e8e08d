#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "zygdist/cli.hpp"
#include "zygdist/functionals.hpp"
#include "zygdist/generators.hpp"
#include "zygdist/io.hpp"

using namespace zyg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zygdist");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("generators") {
  const SampledFunction rj = random_jumps_function(10, 0.5, 1);
  CHECK(dyadic_zygmund_seminorm(rj) == 1.0);
  CHECK(rj.compactly_supported());
  CHECK(random_jumps_function(10, 0.5, 1).values() == rj.values());
  CHECK(random_jumps_function(10, 0.5, 2).values() != rj.values());
  const SampledFunction w = weierstrass_function(12, 8);
  CHECK(std::isfinite(zygmund_seminorm(w)));
  CHECK(w[0] == doctest::Approx(2.0 - std::ldexp(1.0, -7)));
  const SampledFunction lac = lacunary_function(10, 1.0, 3);
  CHECK(lac.compactly_supported());
  CHECK(single_branch_function(8, 0.5).compactly_supported());
  for (int d : {1, 2, 3}) CHECK(cascade_measure(d, 3, {0.5, 0.25}, 9).total_mass() == doctest::Approx(1.0).epsilon(1e-15));
  auto e1 = stream_engine(5, 7);
  auto e2 = stream_engine(5, 7);
  auto e3 = stream_engine(5, 8);
  CHECK(e1() == e2());
  CHECK(e1() != e3());
  for (int i = 0; i < 1000; ++i) {
    const double u = unit_uniform(e1);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("resampling round trips") {
  test::Gen g(61);
  const SampledFunction f = g.grid_function(5);
  const SampledFunction fine = refine(f, 8);
  CHECK(restrict_to(fine, 5).values() == f.values());
  CHECK(average_growth(fine).value(3, 5) == average_growth(f).value(3, 5));
  const GridMeasure mu = cascade_measure(2, 5, {0.25, 0.25, 0.25}, 3);
  const GridMeasure c = coarsen(mu, 3);
  CHECK(c.total_mass() == doctest::Approx(mu.total_mass()).epsilon(1e-15));
  CHECK(density(c, DyadicCube{2, {1, 3}}) == doctest::Approx(density(mu, DyadicCube{2, {1, 3}})).epsilon(1e-14));
}

TEST_CASE("file parsing names the violated invariant") {
  const auto fails = [](const std::string& text, const std::string& needle) {
    try {
      const Json doc = parse_json(text);
      if (input_format(doc) == kFunctionFormat) {
        (void)parse_function_file(doc);
      } else {
        (void)parse_measure_file(doc);
      }
    } catch (const InputError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  CHECK(fails("{", "valid JSON"));
  CHECK(fails(R"({"format":"zygdist.function","schema_version":1,"depth":2,"values":[0,1,2]})", "2^depth + 1"));
  CHECK(fails(R"({"format":"zygdist.function","schema_version":2,"depth":2,"values":[0,1,2,3,4]})", "schema_version"));
  CHECK(fails(R"({"format":"zygdist.function","schema_version":1,"depth":1,"values":[0,"a",2]})", "values[1]"));
  CHECK(fails(R"({"format":"zygdist.measure","schema_version":1,"dimension":4,"depth":1,"masses":[1]})", "dimension"));
  CHECK(fails(R"({"format":"zygdist.measure","schema_version":1,"dimension":2,"depth":1,"masses":[1,1]})",
              "2^(dimension * depth)"));
  const FunctionFile ok = parse_function_file(function_file_json(hat_function(3), Json{{"generator", "hat"}}));
  CHECK(ok.function.values() == hat_function(3).values());
  CHECK(ok.metadata["generator"] == "hat");
  CHECK(fnv1a64("") == "fnv1a64:cbf29ce484222325");
  CHECK(fnv1a64("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("command exit codes") {
  CHECK(run({"seminorm", "--in", "/nonexistent/f.json"}).code == kExitInputError);
  CHECK(run({"bogus"}).code == kExitInputError);
  CHECK(run({"generate", "--kind", "nothing"}).code == kExitInputError);
  const Run gen = run({"generate", "--kind", "random-jumps", "--depth", "10", "--delta", "0.5", "--seed", "4"});
  REQUIRE(gen.code == kExitOk);
  const std::string path = "cli_rj.json";
  write_text(path, gen.out);
  CHECK(run({"distance-ibmo", "--in", path, "--depths", "6,8"}).code == kExitInputError);
  const Run inc = run({"distance-ibmo", "--in", path, "--depths", "6,8,10", "--eps-grid", "0.25,0.5"});
  CHECK(inc.code == kExitInconclusive);
  CHECK(Json::parse(inc.out)["results"].contains("D"));
  const Run ok = run({"distance-ibmo", "--in", path, "--depths", "6,8,10", "--eps-grid", "0.5,1,2"});
  CHECK(ok.code == kExitOk);
  CHECK(Json::parse(ok.out)["results"]["D"]["estimate"]["eps"] == 1.0);
  CHECK(run({"measure", "--in", path}).code == kExitInputError);
  CHECK(run({"seminorm", "--in", path, "--at", "0.3:0.1"}).code == kExitInputError);
  CHECK(run({"seminorm", "--in", path, "--at", "0.3:0.1", "--interpolate"}).code == kExitOk);
}

TEST_CASE("reports are byte-identical across thread counts") {
  const Run gen = run({"generate", "--kind", "lacunary", "--depth", "9"});
  write_text("cli_lac.json", gen.out);
  for (const char* cmd : {"distance-ibmo", "decompose", "sobolev", "strichartz"}) {
    std::vector<std::string> base{cmd, "--in", "cli_lac.json", "--eps-grid", "0.5,1,4", "--depths", "5,7,9"};
    auto one = base;
    one.insert(one.end(), {"--threads", "1"});
    auto many = base;
    many.insert(many.end(), {"--threads", "6"});
    const Run a = run(one);
    const Run b = run(many);
    CHECK(a.code == b.code);
    CHECK(Json::parse(a.out)["results"] == Json::parse(b.out)["results"]);
    CHECK(Json::parse(a.out)["input_digest"] == Json::parse(b.out)["input_digest"]);
  }
  CHECK_FALSE(Json::parse(run({"seminorm", "--in", "cli_lac.json"}).out).contains("wall_time_seconds"));
  CHECK(Json::parse(run({"seminorm", "--in", "cli_lac.json", "--timing"}).out).contains("wall_time_seconds"));
}

TEST_CASE("golden seminorm report") {
  const std::string dir = ZYGDIST_GOLDEN_DIR;
  const std::string input = slurp(dir + "/hat6.json");
  write_text("hat6.json", input);
  const Run r = run({"seminorm", "--in", "hat6.json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == slurp(dir + "/seminorm_hat6.report.json"));
  const Run linear = run({"generate", "--kind", "linear", "--depth", "6"});
  write_text("linear6.json", linear.out);
  const Json rep = Json::parse(run({"seminorm", "--in", "linear6.json"}).out);
  CHECK(rep["results"]["zygmund_seminorm"]["value"] == 0.0);
  CHECK(rep["results"]["dyadic_zygmund_seminorm"]["value"] == 0.0);
}
