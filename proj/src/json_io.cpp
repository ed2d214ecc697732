#include "bibaz/json_io.hpp"

#include <chrono>
#include <ctime>

#include "bibaz/error.hpp"

namespace bibaz {

namespace {

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

cplx complex_or(const json& j, const char* key, cplx fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return complex_from_json(j.at(key));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ValidationError("expected a number or an [re, im] pair, got " + j.dump());
}

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

ComplexSeries series_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("series literal must be a nonempty array");
  std::vector<cplx> c;
  c.reserve(j.size());
  for (const json& x : j) c.push_back(complex_from_json(x));
  return ComplexSeries(std::move(c));
}

json series_to_json(const ComplexSeries& s) {
  json out = json::array();
  for (cplx c : s.coeffs()) out.push_back(complex_to_json(c));
  return out;
}

OperatorConfig operator_config_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("'op' must be an object");
  OperatorConfig op;
  const bool explicit_params = j.contains("mu") || j.contains("b");
  op.preset = get_or<std::string>(j, "preset", explicit_params ? "custom" : "identity");
  op.nu = get_or<double>(j, "nu", op.nu);
  op.sigma = get_or<double>(j, "sigma", op.sigma);
  op.mu = complex_or(j, "mu", op.mu);
  op.b = complex_or(j, "b", op.b);
  return op;
}

json to_json(const OperatorConfig& op) {
  json j{{"preset", op.preset}};
  if (op.preset == "libera-bernardi") j["nu"] = op.nu;
  if (op.preset == "jung-kim-srivastava") j["sigma"] = op.sigma;
  if (op.preset == "custom") {
    j["mu"] = complex_to_json(op.mu);
    j["b"] = complex_to_json(op.b);
  }
  return j;
}

json to_json(const OperatorSpec& op) {
  return {{"mu", complex_to_json(op.mu)}, {"b", complex_to_json(op.b)}};
}

PhiConfig phi_config_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("'phi' must be an object");
  PhiConfig phi;
  phi.preset = get_or<std::string>(j, "preset", j.contains("B1") ? "custom" : "koebe");
  phi.alpha = get_or<double>(j, "alpha", phi.alpha);
  phi.A = get_or<double>(j, "A", phi.A);
  phi.B = get_or<double>(j, "B", phi.B);
  phi.beta = get_or<double>(j, "beta", phi.beta);
  phi.B1 = get_or<double>(j, "B1", phi.B1);
  phi.B2 = get_or<double>(j, "B2", phi.B2);
  if (j.contains("B3")) phi.B3 = get_or<double>(j, "B3", 0.0);
  return phi;
}

json to_json(const PhiConfig& phi) {
  json j{{"preset", phi.preset}};
  if (phi.preset == "strongly-starlike") j["alpha"] = phi.alpha;
  if (phi.preset == "janowski") {
    j["A"] = phi.A;
    j["B"] = phi.B;
  }
  if (phi.preset == "starlike-order") j["beta"] = phi.beta;
  if (phi.preset == "custom") {
    j["B1"] = phi.B1;
    j["B2"] = phi.B2;
    if (phi.B3) j["B3"] = *phi.B3;
  }
  return j;
}

ClassConfig class_config_from_json(const json& input) {
  const json& j = input.contains("spec") ? input.at("spec") : input;
  if (!j.is_object()) throw ValidationError("class spec must be a JSON object");
  ClassConfig cfg;
  cfg.kind = parse_class_kind(get_or<std::string>(j, "kind", "B"));
  cfg.gamma = complex_or(j, "gamma", cfg.gamma);
  cfg.lambda = get_or<double>(j, "lambda", cfg.lambda);
  if (j.contains("op")) cfg.op = operator_config_from_json(j.at("op"));
  if (j.contains("phi")) cfg.phi = phi_config_from_json(j.at("phi"));
  if (j.contains("psi")) {
    const json& psi = j.at("psi");
    if (!psi.is_object()) throw ValidationError("'psi' must be an object");
    cfg.c0 = complex_or(psi, "C0", cfg.c0);
    cfg.c1 = complex_or(psi, "C1", cfg.c1);
    cfg.unchecked_psi = get_or<bool>(psi, "unchecked", false);
  }
  return cfg;
}

json to_json(const ClassConfig& cfg) {
  json psi{{"C0", complex_to_json(cfg.c0)}, {"C1", complex_to_json(cfg.c1)}};
  if (cfg.unchecked_psi) psi["unchecked"] = true;
  return {{"kind", to_string(cfg.kind)},
          {"gamma", complex_to_json(cfg.gamma)},
          {"lambda", cfg.lambda},
          {"op", to_json(cfg.op)},
          {"phi", to_json(cfg.phi)},
          {"psi", psi}};
}

json to_json(const BoundReport& r) {
  json j{{"a2_bound", r.a2_bound},         {"a3_bound", r.a3_bound},
         {"theta2", r.theta2},             {"theta3", r.theta3},
         {"degenerate", r.degenerate}};
  if (r.degenerate) j["degenerate_reason"] = r.degenerate_reason;
  if (r.a3_bound_linear_gamma) j["a3_bound_linear_gamma"] = *r.a3_bound_linear_gamma;
  j["warnings"] = r.warnings;
  return j;
}

json to_json(const TightnessReport& r) {
  return {{"target", to_string(r.target)},
          {"best_value", r.best_value},
          {"bound", r.bound},
          {"ratio", r.ratio},
          {"evaluations", r.evaluations},
          {"argmax",
           {{"weights", r.argmax.weights},
            {"angles", r.argmax.angles},
            {"c1_phase", r.argmax.c1_phase}}}};
}

json to_json(const SweepEntry& e) {
  json j{{"value", e.value}, {"bounds", to_json(e.bounds)}};
  if (e.tightness) j["tightness"] = to_json(*e.tightness);
  return j;
}

json make_manifest(const std::string& command, const json& parameters, std::uint64_t seed) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return {{"command", command},
          {"parameters", parameters},
          {"seed", seed},
          {"version", kToolVersion},
          {"timestamp", stamp}};
}

}  // namespace bibaz
