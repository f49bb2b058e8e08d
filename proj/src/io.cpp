#include "zygdist/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace zyg {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
}

std::string input_format(const Json& doc) {
  if (!doc.is_object()) throw InputError("input: top level must be an object");
  if (!doc.contains("format") || !doc["format"].is_string()) throw InputError("format: missing string tag");
  if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion) {
    throw InputError("schema_version: expected " + std::to_string(kSchemaVersion));
  }
  return doc["format"].get<std::string>();
}

namespace {

int read_int(const Json& doc, const char* key, int lo, int hi) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) throw InputError(std::string(key) + ": missing integer");
  const auto v = doc[key].get<long long>();
  if (v < lo || v > hi) {
    throw InputError(std::string(key) + ": must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                     std::to_string(v));
  }
  return static_cast<int>(v);
}

std::vector<double> read_reals(const Json& doc, const char* key, std::size_t expected, const std::string& rule) {
  if (!doc.contains(key) || !doc[key].is_array()) throw InputError(std::string(key) + ": missing array");
  const Json& arr = doc[key];
  if (arr.size() != expected) {
    throw InputError(std::string(key) + ": expected " + rule + " = " + std::to_string(expected) + " entries, got " +
                     std::to_string(arr.size()));
  }
  std::vector<double> out(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    if (!arr[i].is_number() || !std::isfinite(arr[i].get<double>())) {
      throw InputError(std::string(key) + "[" + std::to_string(i) + "]: expected a finite number");
    }
    out[i] = arr[i].get<double>();
  }
  return out;
}

Json read_metadata(const Json& doc) {
  if (!doc.contains("metadata")) return Json::object();
  if (!doc["metadata"].is_object()) throw InputError("metadata: must be an object");
  return doc["metadata"];
}

}  // namespace

FunctionFile parse_function_file(const Json& doc) {
  if (input_format(doc) != kFunctionFormat) throw InputError(std::string("format: expected '") + kFunctionFormat + "'");
  const int depth = read_int(doc, "depth", 1, SampledFunction::kMaxDepth);
  auto values = read_reals(doc, "values", (std::size_t{1} << depth) + 1, "2^depth + 1");
  return FunctionFile{SampledFunction(depth, std::move(values)), read_metadata(doc)};
}

MeasureFile parse_measure_file(const Json& doc) {
  if (input_format(doc) != kMeasureFormat) throw InputError(std::string("format: expected '") + kMeasureFormat + "'");
  const int d = read_int(doc, "dimension", 1, 3);
  const int depth = read_int(doc, "depth", 0, 26 / d);
  auto masses = read_reals(doc, "masses", std::size_t{1} << (d * depth), "2^(dimension * depth)");
  return MeasureFile{GridMeasure(d, depth, std::move(masses)), read_metadata(doc)};
}

Json function_file_json(const SampledFunction& f, const Json& metadata) {
  Json doc;
  doc["format"] = kFunctionFormat;
  doc["schema_version"] = kSchemaVersion;
  doc["depth"] = f.depth();
  doc["values"] = f.values();
  doc["metadata"] = metadata;
  return doc;
}

Json measure_file_json(const GridMeasure& mu, const Json& metadata) {
  Json doc;
  doc["format"] = kMeasureFormat;
  doc["schema_version"] = kSchemaVersion;
  doc["dimension"] = mu.dimension();
  doc["depth"] = mu.depth();
  doc["masses"] = mu.masses();
  doc["metadata"] = metadata;
  return doc;
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json tagged(double value, const Json& method) {
  Json out;
  out["value"] = number(value);
  out["method"] = method;
  return out;
}

Json to_json(const DyadicInterval& I) { return Json{{"generation", I.generation}, {"offset", I.offset}}; }

Json to_json(const ThresholdEstimate& est) {
  Json out;
  out["eps"] = number(est.eps);
  out["conclusive"] = est.conclusive;
  out["method"] = Json{{"rule", est.method}, {"tau", est.tau}, {"reference_depth", est.reference_depth},
                       {"top_depth", est.top_depth}};
  return out;
}

Json to_json(const DistanceProfile& profile, bool with_estimate) {
  Json out;
  out["functional"] = profile.functional;
  out["eps"] = profile.eps;
  out["depths"] = profile.depths;
  Json rows = Json::array();
  for (std::size_t i = 0; i < profile.eps.size(); ++i) {
    for (std::size_t j = 0; j < profile.depths.size(); ++j) {
      rows.push_back(Json{{"eps", profile.eps[i]}, {"depth", profile.depths[j]}, {"value", number(profile.values[i][j])}});
    }
  }
  out["table"] = std::move(rows);
  if (with_estimate) out["estimate"] = to_json(profile.estimate);
  return out;
}

Json to_json(const RatioReport& r) {
  Json out;
  out["name"] = r.name;
  out["seed"] = r.seed;
  out["samples"] = r.samples;
  out["admissible"] = Json{{"coarse", r.admissible_coarse}, {"fine", r.admissible_fine}};
  out["depths"] = Json{{"coarse", r.coarse_depth}, {"fine", r.fine_depth}};
  out["norm"] = number(r.norm);
  out["max_ratio"] = Json{{"coarse", number(r.max_ratio_coarse)}, {"fine", number(r.max_ratio_fine)}};
  out["stability"] = number(r.stability);
  out["argmax"] = r.argmax;
  out["method"] = "log-uniform scales snapped to both grids; max ratio per grid; stability = fine / coarse";
  return out;
}

Json to_json(const DyadicDistanceReport& r) {
  Json out;
  out["depth"] = r.depth;
  out["pairs"] = r.pairs;
  out["norm"] = number(r.norm);
  out["max_ratio"] = number(r.max_ratio);
  out["argmax"] = Json{to_json(r.argmax_first), to_json(r.argmax_second)};
  out["pass"] = r.max_ratio <= 1.0;
  out["method"] = "exhaustive over dyadic pairs, alpha = 0";
  return out;
}

Json to_json(const PredecessorReport& r) {
  Json out;
  out["interval"] = Json{r.interval.left.to_string(), r.interval.right.to_string()};
  out["R"] = r.R.to_string();
  out["N"] = r.N;
  out["M"] = r.M;
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"count", row.count},
                        {"estimate", row.estimate},
                        {"standard_error", row.standard_error},
                        {"bound", row.bound},
                        {"pass", row.pass}});
  }
  out["rows"] = std::move(rows);
  out["total"] = r.total;
  out["pass"] = r.pass;
  out["method"] = "Monte Carlo over alpha on the 2^-40 lattice of [-R, R); pass: estimate <= bound (1 + 3 relative standard error)";
  return out;
}

Json to_json(const BdgReport& r) {
  Json out;
  out["p"] = r.p;
  out["members"] = r.ratios.size();
  out["skipped"] = r.skipped;
  out["min_ratio"] = number(r.min_ratio);
  out["max_ratio"] = number(r.max_ratio);
  out["pass"] = r.pass;
  out["method"] = "lp_norm(maximal_function) / lp_norm(quadratic_characteristic) per member";
  return out;
}

Json to_json(const ConsistencyReport& r) {
  Json out;
  out["eps"] = r.eps;
  out["depths"] = r.depths;
  out["tau"] = r.tau;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"name", row.name},
                        {"strichartz_bounded", row.strichartz_bounded},
                        {"C_bounded", row.c_bounded},
                        {"D_bounded", row.d_bounded},
                        {"mismatches", row.mismatches}});
  }
  out["rows"] = std::move(rows);
  out["mismatches"] = r.mismatches;
  out["method"] = "growth ratio <= 1 + tau between the top depth and its reference depth";
  return out;
}

}  // namespace zyg
