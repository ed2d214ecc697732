#include "bibaz/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "bibaz/error.hpp"

namespace bibaz {

SearchTarget parse_search_target(const std::string& name) {
  if (name == "a2") return SearchTarget::a2;
  if (name == "a3") return SearchTarget::a3;
  throw ValidationError("unknown search target '" + name + "' (a2|a3)");
}

std::string to_string(SearchTarget t) { return t == SearchTarget::a2 ? "a2" : "a3"; }

void SearchConfig::validate() const {
  if (restarts < 1) throw ValidationError("search needs restarts >= 1");
  if (budget < restarts) throw ValidationError("search needs budget >= restarts");
  if (atoms < 1) throw ValidationError("search needs atoms >= 1");
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinStep = 1e-9;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t >= kTwoPi ? 0.0 : t;
}

// Layout: [w_0..w_{m-1}, theta_0..theta_{m-1}, c1_phase (optional)].
class Objective {
 public:
  Objective(const ProofRelations& rel, SearchTarget target, int atoms, bool use_phase)
      : rel_(rel), target_(target), atoms_(atoms), use_phase_(use_phase) {}

  int dims() const { return 2 * atoms_ + (use_phase_ ? 1 : 0); }
  bool is_weight(int d) const { return d < atoms_; }

  SearchPoint decode(const std::vector<double>& x) const {
    SearchPoint pt;
    double total = 0.0;
    for (int j = 0; j < atoms_; ++j) total += std::abs(x[j]);
    for (int j = 0; j < atoms_; ++j)
      pt.weights.push_back(total > 0.0 ? std::abs(x[j]) / total : 1.0 / atoms_);
    for (int j = 0; j < atoms_; ++j) pt.angles.push_back(wrap_angle(x[atoms_ + j]));
    pt.c1_phase = use_phase_ ? wrap_angle(x[2 * atoms_]) : 0.0;
    return pt;
  }

  double operator()(const std::vector<double>& x) const {
    const SearchPoint pt = decode(x);
    const CaratheodoryAtoms atoms{pt.weights, pt.angles};
    const ComplexSeries p = herglotz_sample(atoms, 2);
    const ComplexSeries q = herglotz_sample(atoms.reflected(), 2);
    const ProofSolution s = rel_.solve({p[1], p[2], q[2]}, std::polar(1.0, pt.c1_phase));
    return target_ == SearchTarget::a2 ? std::sqrt(std::abs(s.a2sq)) : std::abs(s.a3);
  }

 private:
  const ProofRelations& rel_;
  SearchTarget target_;
  int atoms_;
  bool use_phase_;
};

struct RestartResult {
  double best = -1.0;
  std::vector<double> argmax;
  long evaluations = 0;
  std::vector<TraceEntry> trace;
};

std::vector<double> random_start(Rng& rng, const Objective& obj) {
  std::vector<double> x(static_cast<std::size_t>(obj.dims()));
  for (int d = 0; d < obj.dims(); ++d) x[d] = obj.is_weight(d) ? rng.exponential() : rng.uniform(0.0, kTwoPi);
  return x;
}

std::vector<double> initial_steps(const Objective& obj) {
  std::vector<double> s(static_cast<std::size_t>(obj.dims()));
  for (int d = 0; d < obj.dims(); ++d) s[d] = obj.is_weight(d) ? 0.5 : 1.0;
  return s;
}

RestartResult run_restart(const Objective& obj, int restart, long budget, std::uint64_t seed,
                          bool record_trace) {
  Rng rng(seed);
  RestartResult out;
  auto evaluate = [&](const std::vector<double>& x) {
    const double v = obj(x);
    if (v > out.best) {
      out.best = v;
      out.argmax = x;
    }
    if (record_trace) out.trace.push_back({restart, out.evaluations, v, out.best});
    ++out.evaluations;
    return v;
  };

  std::vector<double> x = random_start(rng, obj);
  std::vector<double> step = initial_steps(obj);
  double fx = evaluate(x);
  while (out.evaluations < budget) {
    bool improved = false;
    for (int d = 0; d < obj.dims() && out.evaluations < budget; ++d) {
      for (double dir : {1.0, -1.0}) {
        if (out.evaluations >= budget) break;
        std::vector<double> trial = x;
        trial[d] += dir * step[d];
        if (obj.is_weight(d)) trial[d] = std::abs(trial[d]);
        const double ft = evaluate(trial);
        if (ft > fx) {
          x = std::move(trial);
          fx = ft;
          improved = true;
          break;
        }
      }
    }
    if (improved) continue;
    bool converged = true;
    for (double& s : step) {
      s *= 0.5;
      if (s > kMinStep) converged = false;
    }
    if (converged && out.evaluations < budget) {
      // Local search has stalled; spend the rest of the budget from a new point.
      x = random_start(rng, obj);
      step = initial_steps(obj);
      fx = evaluate(x);
    }
  }
  return out;
}

}  // namespace

TightnessReport tightness_search(const ClassSpec& spec, const SearchConfig& cfg) {
  cfg.validate();
  const ProofRelations rel(spec);
  TightnessReport report;
  report.target = cfg.target;
  report.bound = cfg.target == SearchTarget::a2 ? bound_a2(spec) : bound_a3(spec);

  const bool use_phase = cfg.target == SearchTarget::a3 && std::abs(spec.psi.C1) > 0.0;
  const Objective obj(rel, cfg.target, cfg.atoms, use_phase);

  std::vector<RestartResult> results(static_cast<std::size_t>(cfg.restarts));
  {
    std::vector<std::jthread> pool;
    for (int r = 0; r < cfg.restarts; ++r) {
      const long share = cfg.budget / cfg.restarts + (r < cfg.budget % cfg.restarts ? 1 : 0);
      pool.emplace_back([&, r, share] {
        results[static_cast<std::size_t>(r)] =
            run_restart(obj, r, share, derive_seed(cfg.seed, static_cast<std::uint64_t>(r)),
                        cfg.record_trace);
      });
    }
  }

  int winner = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    const RestartResult& res = results[static_cast<std::size_t>(r)];
    report.evaluations += res.evaluations;
    if (res.best > results[static_cast<std::size_t>(winner)].best) winner = r;
    if (cfg.record_trace) report.trace.insert(report.trace.end(), res.trace.begin(), res.trace.end());
  }
  const RestartResult& best = results[static_cast<std::size_t>(winner)];
  report.best_value = std::max(0.0, best.best);
  report.argmax = obj.decode(best.argmax);
  if (report.bound > 0.0)
    report.ratio = report.best_value / report.bound;
  else
    report.ratio = report.best_value == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return report;
}

std::vector<SweepEntry> parameter_sweep(const ClassConfig& base, const std::string& axis,
                                        const std::vector<double>& values,
                                        const std::optional<SearchConfig>& search) {
  std::vector<SweepEntry> out;
  out.reserve(values.size());
  for (double v : values) {
    ClassSpec spec;
    try {
      ClassConfig cfg = base;
      set_axis(cfg, axis, v);
      spec = cfg.resolve();
    } catch (const ValidationError& e) {
      throw ValidationError("sweep " + axis + "=" + format_double(v) + ": " + e.what());
    }
    SweepEntry entry;
    entry.value = v;
    entry.bounds = compute_bounds(spec);
    if (search && !entry.bounds.degenerate) entry.tightness = tightness_search(spec, *search);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace bibaz
