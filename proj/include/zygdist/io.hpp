#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "zygdist/functionals.hpp"
#include "zygdist/measures.hpp"
#include "zygdist/sampled_function.hpp"
#include "zygdist/verification.hpp"

namespace zyg {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the violated invariant.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kFunctionFormat = "zygdist.function";
inline constexpr const char* kMeasureFormat = "zygdist.measure";

struct FunctionFile {
  SampledFunction function;
  Json metadata;
};

struct MeasureFile {
  GridMeasure measure;
  Json metadata;
};

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

/// Value of the "format" key of a parsed input document.
std::string input_format(const Json& doc);
Json parse_json(const std::string& text);
FunctionFile parse_function_file(const Json& doc);
MeasureFile parse_measure_file(const Json& doc);

Json function_file_json(const SampledFunction& f, const Json& metadata);
Json measure_file_json(const GridMeasure& mu, const Json& metadata);

/// 64-bit FNV-1a digest, as "fnv1a64:" followed by 16 hex digits.
std::string fnv1a64(std::string_view bytes);

/// Serialized report document with a trailing newline.
std::string dump(const Json& doc);

Json to_json(const DyadicInterval& I);
Json to_json(const ThresholdEstimate& est);
/// Tidy rows (eps, depth, value) plus the threshold estimate when present.
Json to_json(const DistanceProfile& profile, bool with_estimate);
Json to_json(const RatioReport& r);
Json to_json(const DyadicDistanceReport& r);
Json to_json(const PredecessorReport& r);
Json to_json(const BdgReport& r);
Json to_json(const ConsistencyReport& r);

/// {"value": v, "method": method}; non-finite values become null.
Json tagged(double value, const Json& method);
/// JSON number, or null when v is not finite.
Json number(double v);

}  // namespace zyg
