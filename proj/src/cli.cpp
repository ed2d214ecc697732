#include "bibaz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bibaz/error.hpp"
#include "bibaz/json_io.hpp"

namespace bibaz {

namespace {

constexpr double kOracleTol = 1e-9;
constexpr double kFalsifyTol = 1e-9;

// "re" or "re,im".
cplx parse_complex(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  if (!(is >> re)) throw ValidationError("cannot parse complex value '" + text + "'");
  if (!(is >> im)) im = 0.0;
  std::string rest;
  if (is >> rest) throw ValidationError("cannot parse complex value '" + text + "'");
  return {re, im};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  double x;
  while (is >> x) out.push_back(x);
  if (!is.eof()) throw ValidationError("cannot parse value list '" + text + "'");
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << text;
}

// Class-description flags; strings so that "given or not" is explicit.
struct ClassFlags {
  std::string spec_file;
  std::string kind, gamma, lambda;
  std::string op, nu, sigma, mu, b;
  std::string phi, alpha, janowski_a, janowski_b, beta, B1, B2, B3;
  std::string c0, c1;
  bool unchecked_psi = false;

  void attach(CLI::App* app) {
    app->add_option("--spec", spec_file, "class spec JSON file (flags override its fields)");
    app->add_option("--kind", kind, "class kind: B or G");
    app->add_option("--gamma", gamma, "complex order gamma (re or re,im)");
    app->add_option("--lambda", lambda, "lambda");
    app->add_option("--op", op, "operator preset: identity|libera-bernardi|jung-kim-srivastava|custom");
    app->add_option("--nu", nu, "Libera-Bernardi nu");
    app->add_option("--sigma", sigma, "Jung-Kim-Srivastava sigma");
    app->add_option("--mu", mu, "operator exponent mu (implies --op custom)");
    app->add_option("--b", b, "operator shift b (implies --op custom)");
    app->add_option("--phi", phi, "phi preset: koebe|strongly-starlike|janowski|starlike-order|custom");
    app->add_option("--alpha", alpha, "strongly-starlike alpha");
    app->add_option("--janowski-A", janowski_a, "Janowski A");
    app->add_option("--janowski-B", janowski_b, "Janowski B");
    app->add_option("--beta", beta, "starlike order beta");
    app->add_option("--B1", B1, "phi coefficient B1 (implies --phi custom)");
    app->add_option("--B2", B2, "phi coefficient B2");
    app->add_option("--B3", B3, "phi coefficient B3");
    app->add_option("--c0", c0, "psi coefficient C0 (re or re,im)");
    app->add_option("--c1", c1, "psi coefficient C1 (re or re,im)");
    app->add_flag("--unchecked-psi", unchecked_psi, "skip the |C0| <= 1 check");
  }

  ClassConfig merge() const {
    ClassConfig cfg;
    if (!spec_file.empty()) cfg = class_config_from_json(read_json_file(spec_file));
    auto real = [](const std::string& s) { return parse_complex(s).real(); };
    if (!kind.empty()) cfg.kind = parse_class_kind(kind);
    if (!gamma.empty()) cfg.gamma = parse_complex(gamma);
    if (!lambda.empty()) cfg.lambda = real(lambda);
    if (!op.empty()) cfg.op.preset = op;
    if (!mu.empty() || !b.empty()) {
      if (op.empty()) cfg.op.preset = "custom";
      if (!mu.empty()) cfg.op.mu = parse_complex(mu);
      if (!b.empty()) cfg.op.b = parse_complex(b);
    }
    if (!nu.empty()) cfg.op.nu = real(nu);
    if (!sigma.empty()) cfg.op.sigma = real(sigma);
    if (!phi.empty()) cfg.phi.preset = phi;
    if (!B1.empty() && phi.empty()) cfg.phi.preset = "custom";
    if (!alpha.empty()) cfg.phi.alpha = real(alpha);
    if (!janowski_a.empty()) cfg.phi.A = real(janowski_a);
    if (!janowski_b.empty()) cfg.phi.B = real(janowski_b);
    if (!beta.empty()) cfg.phi.beta = real(beta);
    if (!B1.empty()) cfg.phi.B1 = real(B1);
    if (!B2.empty()) cfg.phi.B2 = real(B2);
    if (!B3.empty()) cfg.phi.B3 = real(B3);
    if (!c0.empty()) cfg.c0 = parse_complex(c0);
    if (!c1.empty()) cfg.c1 = parse_complex(c1);
    if (unchecked_psi) cfg.unchecked_psi = true;
    return cfg;
  }
};

json resolved_json(const ClassSpec& spec) {
  json phi{{"B1", spec.phi.B1}, {"B2", spec.phi.B2}};
  if (spec.phi.B3) phi["B3"] = *spec.phi.B3;
  return {{"op", to_json(spec.op)}, {"phi", phi}};
}

int cmd_bound(const ClassFlags& flags, std::ostream& out, std::ostream& err) {
  const ClassConfig cfg = flags.merge();
  const ClassSpec spec = cfg.resolve();
  const BoundReport report = compute_bounds(spec);
  const json params = to_json(cfg);
  json doc{{"manifest", make_manifest("bound", params, 0)},
           {"spec", params},
           {"resolved", resolved_json(spec)},
           {"report", to_json(report)}};
  out << doc.dump(2) << '\n';
  for (const std::string& w : report.warnings) err << "warning: " << w << '\n';
  if (report.degenerate) {
    err << "degenerate: " << report.degenerate_reason
        << " (the estimates give no information for these parameters)\n";
    return kExitDegenerate;
  }
  return kExitOk;
}

struct VerifyFlags {
  long samples = 10'000;
  std::uint64_t seed = 0;
  int atoms = kDefaultAtoms;
  int threads = 0;
  std::string out_path;
};

int cmd_verify(const ClassFlags& flags, const VerifyFlags& v, std::ostream& out, std::ostream& err) {
  const ClassConfig cfg = flags.merge();
  const ClassSpec spec = cfg.resolve();
  const BoundReport bounds = compute_bounds(spec);
  if (bounds.degenerate) {
    err << "degenerate: " << bounds.degenerate_reason << '\n';
    return kExitDegenerate;
  }
  const std::vector<SampleRecord> records =
      sample_realizable(spec, v.samples, v.seed, v.atoms, v.threads);

  double max_a2 = 0.0, max_a3 = 0.0;
  double min_m2 = std::numeric_limits<double>::infinity(), min_m3 = min_m2;
  long violations = 0;
  for (const SampleRecord& r : records) {
    max_a2 = std::max(max_a2, r.abs_a2);
    max_a3 = std::max(max_a3, r.abs_a3);
    min_m2 = std::min(min_m2, r.margin_a2);
    min_m3 = std::min(min_m3, r.margin_a3);
    if (r.margin_a2 < -kFalsifyTol || r.margin_a3 < -kFalsifyTol) ++violations;
  }
  const bool fail = violations > 0;
  const std::string status = fail ? "FAIL" : (records.empty() ? "PASS-vacuous" : "PASS");

  json params = to_json(cfg);
  json run{{"samples", v.samples}, {"atoms", v.atoms}};
  json manifest = make_manifest("verify", {{"spec", params}, {"run", run}}, v.seed);

  if (!v.out_path.empty()) {
    std::string csv = sample_csv_header() + '\n';
    for (const SampleRecord& r : records) csv += to_csv_row(r) + '\n';
    write_text_file(v.out_path, csv);
    write_text_file(v.out_path + ".manifest.json", manifest.dump(2) + '\n');
  }

  json summary{{"manifest", manifest},
               {"spec", params},
               {"bounds", to_json(bounds)},
               {"samples", v.samples},
               {"max_abs_a2", max_a2},
               {"max_abs_a3", max_a3},
               {"violations", violations},
               {"status", status}};
  if (!records.empty()) {
    summary["min_margin_a2"] = min_m2;
    summary["min_margin_a3"] = min_m3;
  }
  if (!v.out_path.empty()) summary["csv"] = v.out_path;
  out << summary.dump(2) << '\n';
  if (fail) {
    err << "FAIL: " << violations << " sample(s) exceed a closed-form estimate by more than "
        << kFalsifyTol << '\n';
    return kExitFalsified;
  }
  return kExitOk;
}

int cmd_oracle(const ClassFlags& flags, const RelaxedScan& scan, std::ostream& out,
               std::ostream& err) {
  const ClassConfig cfg = flags.merge();
  const ClassSpec spec = cfg.resolve();
  const BoundReport bounds = compute_bounds(spec);
  if (bounds.degenerate) {
    err << "degenerate: " << bounds.degenerate_reason << '\n';
    return kExitDegenerate;
  }
  const RelaxedMax m2 = relaxed_max_a2(spec, scan);
  const RelaxedMax m3 = relaxed_max_a3(spec, scan);
  const double d2 = std::abs(m2.value - bounds.a2_bound);
  const double d3 = std::abs(m3.value - bounds.a3_bound);

  auto row = [&](const std::string& name, double oracle, double closed) {
    out << std::left << std::setw(12) << name << std::setw(26) << format_double(oracle)
        << std::setw(26) << format_double(closed) << format_double(std::abs(oracle - closed)) << '\n';
  };
  out << "# kind " << to_string(spec.kind) << ", lambda " << format_double(spec.lambda) << ", grid "
      << scan.phases << "x" << scan.moduli << " per variable + " << scan.random_points
      << " random points\n";
  out << std::left << std::setw(12) << "quantity" << std::setw(26) << "oracle" << std::setw(26)
      << "closed_form" << "abs_diff\n";
  row("a2", m2.value, bounds.a2_bound);
  row("a3", m3.value, bounds.a3_bound);
  if (bounds.a3_bound_linear_gamma) row("a3_lin_gamma", m3.value, *bounds.a3_bound_linear_gamma);

  if (spec.kind == ClassKind::G && spec.lambda == 0.0) {
    CorollaryParams cp{spec.gamma, spec.psi.C0, spec.psi.C1, spec.phi.B1,
                       spec.phi.B2, bounds.theta2, bounds.theta3};
    const BoundReport cor = corollary_bounds(Corollary::sss1, cp);
    const double lin = *bounds.a3_bound_linear_gamma;
    out << "# class G at lambda = 0 vs the lambda = 0 class B corollary: a3 |gamma| form="
        << format_double(lin) << " corollary=" << format_double(cor.a3_bound)
        << " diff=" << format_double(std::abs(lin - cor.a3_bound)) << '\n';
    out << "# class G at lambda = 0 vs the lambda = 0 class B corollary: a2 theorem="
        << format_double(bounds.a2_bound) << " corollary=" << format_double(cor.a2_bound)
        << " diff=" << format_double(std::abs(bounds.a2_bound - cor.a2_bound)) << '\n';
  }
  if (d2 > kOracleTol || d3 > kOracleTol) {
    err << "oracle and closed form disagree beyond " << kOracleTol << '\n';
    return kExitFalsified;
  }
  return kExitOk;
}

int cmd_zeta(const std::string& z, const std::string& s, const std::string& a, double tol,
             std::ostream& out) {
  const HlzetaSum r = hlzeta_eval(parse_complex(z), parse_complex(s), parse_complex(a), tol);
  json doc{{"value", complex_to_json(r.value)}, {"terms", r.terms}, {"tail_bound", r.tail_bound}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

struct OperatorFlags {
  std::string preset, mu, b, nu, sigma, coeffs, variant = "modulus";
};

int cmd_operator(const OperatorFlags& o, std::ostream& out) {
  OperatorConfig cfg;
  cfg.preset = o.preset.empty() ? ((o.mu.empty() && o.b.empty()) ? "identity" : "custom") : o.preset;
  if (!o.mu.empty()) cfg.mu = parse_complex(o.mu);
  if (!o.b.empty()) cfg.b = parse_complex(o.b);
  if (!o.nu.empty()) cfg.nu = parse_complex(o.nu).real();
  if (!o.sigma.empty()) cfg.sigma = parse_complex(o.sigma).real();
  const OperatorSpec spec = cfg.resolve();
  if (o.coeffs.empty()) throw ValidationError("operator needs --coeffs");
  const NormalizedSeries f(series_from_json(read_json_file(o.coeffs)));
  const NormalizedSeries jf = apply_operator(spec, f, parse_operator_variant(o.variant));
  out << series_to_json(jf.series()).dump() << '\n';
  return kExitOk;
}

int cmd_search(const ClassFlags& flags, const SearchConfig& sc, const std::string& trace_path,
               std::ostream& out, std::ostream& err) {
  const ClassConfig cfg = flags.merge();
  const ClassSpec spec = cfg.resolve();
  const BoundReport bounds = compute_bounds(spec);
  if (bounds.degenerate) {
    err << "degenerate: " << bounds.degenerate_reason << '\n';
    return kExitDegenerate;
  }
  SearchConfig run = sc;
  run.record_trace = !trace_path.empty();
  const TightnessReport rep = tightness_search(spec, run);
  if (!trace_path.empty()) {
    std::string csv = "restart,evaluation,value,best\n";
    for (const TraceEntry& t : rep.trace)
      csv += std::to_string(t.restart) + ',' + std::to_string(t.evaluation) + ',' +
             format_double(t.value) + ',' + format_double(t.best) + '\n';
    write_text_file(trace_path, csv);
  }
  json params{{"spec", to_json(cfg)},
              {"search",
               {{"budget", sc.budget},
                {"restarts", sc.restarts},
                {"target", to_string(sc.target)},
                {"atoms", sc.atoms}}}};
  json doc{{"manifest", make_manifest("search", params, sc.seed)}, {"report", to_json(rep)}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_sweep(const ClassFlags& flags, const std::string& axis, const std::string& values,
              bool with_search, const SearchConfig& sc, std::ostream& out) {
  const ClassConfig cfg = flags.merge();
  const std::vector<double> vals = parse_list(values);
  if (vals.empty()) throw ValidationError("sweep needs at least one value");
  std::optional<SearchConfig> search;
  if (with_search) search = sc;
  const std::vector<SweepEntry> entries = parameter_sweep(cfg, axis, vals, search);
  json rows = json::array();
  for (const SweepEntry& e : entries) rows.push_back(to_json(e));
  json params{{"spec", to_json(cfg)}, {"axis", axis}, {"values", vals}};
  json doc{{"manifest", make_manifest("sweep", params, sc.seed)}, {"entries", rows}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient estimates for bi-Bazilevic classes on the Srivastava-Attiya operator", "bibaz"};
  app.require_subcommand(1);

  ClassFlags bound_flags, verify_flags, oracle_flags, search_flags, sweep_flags;

  CLI::App* bound = app.add_subcommand("bound", "closed-form |a2|, |a3| estimates (JSON)");
  bound_flags.attach(bound);

  CLI::App* verify = app.add_subcommand("verify", "check estimates against realizable samples");
  verify_flags.attach(verify);
  VerifyFlags vf;
  verify->add_option("--samples", vf.samples, "number of samples")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vf.seed, "base seed");
  verify->add_option("--atoms", vf.atoms, "Herglotz atoms per sample")->check(CLI::PositiveNumber);
  verify->add_option("--threads", vf.threads, "worker threads (0 = all cores)");
  verify->add_option("--out", vf.out_path, "CSV output path (manifest written next to it)");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force maximum vs closed form");
  oracle_flags.attach(oracle);
  RelaxedScan scan;
  oracle->add_option("--grid", scan.phases, "phase points per complex variable")->check(CLI::PositiveNumber);
  oracle->add_option("--moduli", scan.moduli, "modulus points per complex variable");
  oracle->add_option("--random", scan.random_points, "random top-up points");
  oracle->add_option("--seed", scan.seed, "seed for the random top-up");

  CLI::App* zeta = app.add_subcommand("zeta", "Hurwitz-Lerch zeta Phi(z, s, a)");
  std::string zz, zs, za;
  double ztol = 1e-14;
  zeta->add_option("--z", zz, "z (re or re,im), |z| < 1")->required();
  zeta->add_option("--s", zs, "s")->required();
  zeta->add_option("--a", za, "a")->required();
  zeta->add_option("--tol", ztol, "tail tolerance");

  CLI::App* op = app.add_subcommand("operator", "apply J_mu^b to a coefficient file");
  OperatorFlags of;
  op->add_option("--preset", of.preset, "identity|libera-bernardi|jung-kim-srivastava|custom");
  op->add_option("--mu", of.mu, "mu (re or re,im)");
  op->add_option("--b", of.b, "b (re or re,im)");
  op->add_option("--nu", of.nu, "Libera-Bernardi nu");
  op->add_option("--sigma", of.sigma, "Jung-Kim-Srivastava sigma");
  op->add_option("--coeffs", of.coeffs, "JSON array of [re, im] coefficients, c_0 first");
  op->add_option("--variant", of.variant, "modulus|complex");

  CLI::App* search = app.add_subcommand("search", "tightness search over realizable samples");
  search_flags.attach(search);
  SearchConfig sc;
  std::string target = "a2", trace_path;
  search->add_option("--target", target, "a2|a3");
  search->add_option("--budget", sc.budget, "objective evaluations");
  search->add_option("--restarts", sc.restarts, "independent restarts");
  search->add_option("--seed", sc.seed, "seed");
  search->add_option("--atoms", sc.atoms, "Herglotz atoms");
  search->add_option("--trace", trace_path, "CSV trace of every evaluation");

  CLI::App* sweep = app.add_subcommand("sweep", "bounds along one parameter axis");
  sweep_flags.attach(sweep);
  std::string axis, values;
  bool with_search = false;
  SearchConfig sweep_sc;
  std::string sweep_target = "a2";
  sweep->add_option("--axis", axis, "parameter name")->required();
  sweep->add_option("--values", values, "comma-separated values")->required();
  sweep->add_flag("--search", with_search, "also run a tightness search per value");
  sweep->add_option("--target", sweep_target, "a2|a3");
  sweep->add_option("--budget", sweep_sc.budget, "search evaluations per value");
  sweep->add_option("--restarts", sweep_sc.restarts, "search restarts");
  sweep->add_option("--seed", sweep_sc.seed, "search seed");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (bound->parsed()) return cmd_bound(bound_flags, out, err);
    if (verify->parsed()) return cmd_verify(verify_flags, vf, out, err);
    if (oracle->parsed()) return cmd_oracle(oracle_flags, scan, out, err);
    if (zeta->parsed()) return cmd_zeta(zz, zs, za, ztol, out);
    if (op->parsed()) return cmd_operator(of, out);
    if (search->parsed()) {
      sc.target = parse_search_target(target);
      return cmd_search(search_flags, sc, trace_path, out, err);
    }
    if (sweep->parsed()) {
      sweep_sc.target = parse_search_target(sweep_target);
      return cmd_sweep(sweep_flags, axis, values, with_search, sweep_sc, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DegenerateError& e) {
    err << "degenerate: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace bibaz
