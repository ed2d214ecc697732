#ifndef BIBAZ_JSON_IO_HPP
#define BIBAZ_JSON_IO_HPP

// JSON forms of spec files, series literals and reports.
//
// Complex numbers are either a bare number (imaginary part 0) or an [re, im]
// pair. A series literal is an array of such values, c_0 first.

#include <string>

#include <json.hpp>

#include "bibaz/config.hpp"
#include "bibaz/search.hpp"

namespace bibaz {

using nlohmann::json;

cplx complex_from_json(const json& j);
json complex_to_json(cplx c);

ComplexSeries series_from_json(const json& j);
json series_to_json(const ComplexSeries& s);

// {"mu": [re, im], "b": [re, im]} or {"preset": ..., "nu"/"sigma": ...}.
OperatorConfig operator_config_from_json(const json& j);
json to_json(const OperatorConfig& op);
json to_json(const OperatorSpec& op);

PhiConfig phi_config_from_json(const json& j);
json to_json(const PhiConfig& phi);

// Accepts a bare spec object or any object carrying one under "spec" (so an
// emitted report can be fed back in). Throws ValidationError on schema errors.
ClassConfig class_config_from_json(const json& j);
json to_json(const ClassConfig& cfg);

json to_json(const BoundReport& r);
json to_json(const TightnessReport& r);
json to_json(const SweepEntry& e);

// command, parameters, seed, tool version, UTC timestamp.
json make_manifest(const std::string& command, const json& parameters, std::uint64_t seed);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace bibaz

#endif
