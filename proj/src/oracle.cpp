#include "bibaz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include "bibaz/error.hpp"

namespace bibaz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kResidualOrder = 2;

double residual_through(const ComplexSeries& lhs, const ComplexSeries& rhs, int order) {
  double worst = 0.0;
  const int top = std::min({order, lhs.order(), rhs.order()});
  for (int k = 0; k <= top; ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
  return worst;
}

}  // namespace

void CaratheodoryAtoms::validate() const {
  if (weights.empty() || weights.size() != angles.size())
    throw ValidationError("atoms need matching, nonempty weight and angle lists");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ValidationError("atom weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("atom weights must sum to 1");
  for (double t : angles)
    if (!(t >= 0.0 && t < kTwoPi)) throw ValidationError("atom angles must lie in [0, 2pi)");
}

CaratheodoryAtoms CaratheodoryAtoms::random(Rng& rng, int count) {
  if (count < 1) throw ValidationError("need at least one atom");
  CaratheodoryAtoms atoms;
  double total = 0.0;
  for (int j = 0; j < count; ++j) {
    atoms.weights.push_back(rng.exponential());
    total += atoms.weights.back();
    atoms.angles.push_back(rng.uniform(0.0, kTwoPi));
  }
  if (!(total > 0.0)) {
    atoms.weights.assign(static_cast<std::size_t>(count), 1.0 / count);
  } else {
    for (double& w : atoms.weights) w /= total;
  }
  return atoms;
}

CaratheodoryAtoms CaratheodoryAtoms::reflected() const {
  CaratheodoryAtoms out = *this;
  for (double& t : out.angles) {
    t += std::numbers::pi;
    if (t >= kTwoPi) t -= kTwoPi;
  }
  return out;
}

ComplexSeries herglotz_sample(const CaratheodoryAtoms& atoms, int order) {
  atoms.validate();
  ComplexSeries p = ComplexSeries::constant(1.0, order);
  for (int k = 1; k <= order; ++k) {
    cplx acc{};
    for (std::size_t j = 0; j < atoms.weights.size(); ++j)
      acc += atoms.weights[j] * std::polar(1.0, k * atoms.angles[j]);
    p.set(k, 2.0 * acc);
  }
  return p;
}

ComplexSeries schwarz_from_p(const ComplexSeries& p) {
  if (std::abs(p[0] - 1.0) > kCoefficientTol) throw ValidationError("schwarz_from_p needs p_0 = 1");
  ComplexSeries num = p;
  num.set(0, 0.0);
  ComplexSeries den = p;
  den.set(0, 2.0);
  return divide(num, den);
}

double quasi_sub_residual(const ComplexSeries& f, const ComplexSeries& phi,
                          const ComplexSeries& psi, const ComplexSeries& w) {
  return max_abs_diff(f, mul(psi, compose(phi, w)));
}

ComplexSeries phi_series(const TargetPhi& phi) {
  std::vector<cplx> c{1.0, phi.B1, phi.B2};
  if (phi.B3) c.emplace_back(*phi.B3);
  return ComplexSeries(std::move(c));
}

ComplexSeries psi_series(const MultiplierPsi& psi) { return ComplexSeries({psi.C0, psi.C1}); }

ComplexSeries bazilevic_lhs(const NormalizedSeries& f, const ClassSpec& spec) {
  const NormalizedSeries jf = apply_operator(spec.op, f, OperatorVariant::modulus);
  const ComplexSeries d = derivative(jf.series());
  const ComplexSeries w = mul(d, fractional_power(jf, spec.lambda - 1.0));
  return (1.0 / spec.gamma) * (w - ComplexSeries::constant(1.0, w.order()));
}

ComplexSeries bazilevic_lhs_unit_lambda(const NormalizedSeries& f, const ClassSpec& spec) {
  const NormalizedSeries jf = apply_operator(spec.op, f, OperatorVariant::modulus);
  const ComplexSeries d = derivative(jf.series());
  return (1.0 / spec.gamma) * (d - ComplexSeries::constant(1.0, d.order()));
}

ComplexSeries g_class_lhs(const NormalizedSeries& f, const ClassSpec& spec) {
  const NormalizedSeries jf = apply_operator(spec.op, f, OperatorVariant::modulus);
  const ComplexSeries d = derivative(jf.series());
  // Both numerator and denominator carry a factor z; it cancels.
  const ComplexSeries den = (1.0 - spec.lambda) * divide_by_z(jf.series()) + spec.lambda * d;
  const ComplexSeries ratio = divide(d, den);
  return (1.0 / spec.gamma) * (ratio - ComplexSeries::constant(1.0, ratio.order()));
}

ComplexSeries class_rhs(const ClassSpec& spec, const ComplexSeries& u) {
  if (std::abs(u[0]) != 0.0) throw ValidationError("Schwarz series needs u_0 = 0");
  ComplexSeries x = compose(phi_series(spec.phi), u);
  x.set(0, 0.0);  // phi(0) = 1 exactly
  // x has no constant term, so psi x needs psi only through one order less.
  return multiply_by_z(mul(psi_series(spec.psi), divide_by_z(x)));
}

double class_residual_B(const NormalizedSeries& f, const ClassSpec& spec, const ComplexSeries& u) {
  if (spec.kind != ClassKind::B) throw ValidationError("class_residual_B needs kind B");
  return residual_through(bazilevic_lhs(f, spec), class_rhs(spec, u), kResidualOrder);
}

double class_residual_G(const NormalizedSeries& f, const ClassSpec& spec, const ComplexSeries& u) {
  if (spec.kind != ClassKind::G) throw ValidationError("class_residual_G needs kind G");
  return residual_through(g_class_lhs(f, spec), class_rhs(spec, u), kResidualOrder);
}

double class_residual(const NormalizedSeries& f, const ClassSpec& spec, const ComplexSeries& u) {
  return spec.kind == ClassKind::B ? class_residual_B(f, spec, u) : class_residual_G(f, spec, u);
}

double bi_class_residual(const NormalizedSeries& f, const ClassSpec& spec, const ComplexSeries& u,
                         const ComplexSeries& v) {
  return std::max(class_residual(f, spec, u), class_residual(invert(f), spec, v));
}

void RelaxedPoint::validate() const {
  constexpr double lim = 2.0 + 1e-12;
  if (std::abs(p1) > lim || std::abs(p2) > lim || std::abs(q2) > lim)
    throw ValidationError("relaxed point outside the polydisc |p1|,|p2|,|q2| <= 2");
}

ProofRelations::ProofRelations(const ClassSpec& spec) : spec_(spec) {
  spec_.validate();
  const double l = spec_.lambda;
  const double t2 = spec_.theta2(), t3 = spec_.theta3();
  if (t2 <= kDegenerateTol || t3 <= kDegenerateTol)
    throw DegenerateError("Theta_2 or Theta_3 vanishes");
  const double B1 = spec_.phi.B1, B2 = spec_.phi.B2;
  const cplx g = spec_.gamma, C0 = spec_.psi.C0, C1 = spec_.psi.C1;
  const cplx gc = g * C0;

  if (spec_.kind == ClassKind::B) {
    // First order: (1+l) T2 a2 = g C0 B1 p1 / 2.
    a2_lin_ = gc * B1 / (2.0 * (1.0 + l) * t2);
    // Sum of the second-order relations after eliminating p1^2 + q1^2.
    const cplx den = 2.0 * gc * B1 * B1 * ((l - 1.0) * (l + 2.0) * t2 * t2 + 2.0 * (l + 2.0) * t3) -
                     4.0 * (B2 - B1) * (1.0 + l) * (1.0 + l) * t2 * t2;
    if (!(std::abs(den) / 2.0 > kDegenerateTol))
      throw DegenerateError("class B a2^2 relation is degenerate");
    a2sq_scale_ = gc * gc * B1 * B1 * B1 / den;
    a3_diff_ = gc * B1 / (4.0 * (l + 2.0) * t3);
    a3_c1_ = g * B1 * C1 / (4.0 * (l + 2.0) * t3);
    a3_sq_ = gc * gc * B1 * B1 / (8.0 * (1.0 + l) * (1.0 + l) * t2 * t2);
  } else {
    const double one = 1.0 - l;
    a2_lin_ = gc * B1 / (2.0 * one * t2);
    const cplx den = (gc * (l * l - 1.0) * B1 * B1 + one * one * (B1 - B2)) * t2 * t2 +
                     2.0 * gc * one * B1 * B1 * t3;
    if (!(std::abs(den) > kDegenerateTol))
      throw DegenerateError("class G a2^2 relation is degenerate");
    a2sq_scale_ = gc * gc * B1 * B1 * B1 / (4.0 * den);
    a3_diff_ = gc * B1 / (8.0 * one * t3);
    a3_c1_ = g * C1 * B1 / (8.0 * one * t3);
    a3_sq_ = gc * gc * B1 * B1 / (8.0 * one * one * t2 * t2);
  }
}

ProofSolution ProofRelations::solve(const RelaxedPoint& pt, cplx c1_rotation) const {
  const cplx q1 = pt.q1();
  return {a2sq_scale_ * (pt.p2 + pt.q2),
          a3_diff_ * (pt.p2 - pt.q2) + c1_rotation * a3_c1_ * (pt.p1 - q1) +
              a3_sq_ * (pt.p1 * pt.p1 + q1 * q1)};
}

cplx ProofRelations::a2_from_p1(cplx p1) const { return a2_lin_ * p1; }

ProofSolution solve_proof_relations_B(const RelaxedPoint& pt, const ClassSpec& spec) {
  if (spec.kind != ClassKind::B) throw ValidationError("solve_proof_relations_B needs kind B");
  return ProofRelations(spec).solve(pt);
}

ProofSolution solve_proof_relations_G(const RelaxedPoint& pt, const ClassSpec& spec) {
  if (spec.kind != ClassKind::G) throw ValidationError("solve_proof_relations_G needs kind G");
  return ProofRelations(spec).solve(pt);
}

ProofSolution solve_proof_relations(const RelaxedPoint& pt, const ClassSpec& spec) {
  return ProofRelations(spec).solve(pt);
}

namespace {

std::vector<cplx> polar_grid(const RelaxedScan& scan) {
  if (scan.phases < 1 || scan.moduli < 2) throw ValidationError("scan grid too small");
  std::vector<cplx> g;
  g.reserve(static_cast<std::size_t>(scan.phases * scan.moduli));
  for (int i = 0; i < scan.moduli; ++i) {
    const double r = 2.0 * i / (scan.moduli - 1);
    for (int j = 0; j < scan.phases; ++j) g.push_back(std::polar(r, kTwoPi * j / scan.phases));
  }
  return g;
}

cplx random_in_disc(Rng& rng) {
  return std::polar(2.0 * std::sqrt(rng.uniform()), rng.uniform(0.0, kTwoPi));
}

struct Tracker {
  RelaxedMax best;
  void offer(double v, const RelaxedPoint& pt) {
    ++best.evaluations;
    if (v > best.value) {
      best.value = v;
      best.argmax = pt;
    }
  }
};

double abs_a2(const ProofSolution& s) { return std::sqrt(std::abs(s.a2sq)); }

}  // namespace

RelaxedMax relaxed_max_a2(const ClassSpec& spec, const RelaxedScan& scan) {
  const ProofRelations rel(spec);
  const std::vector<cplx> grid = polar_grid(scan);
  Tracker t;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (const cplx& q2 : grid) {
      const RelaxedPoint pt{grid[i], grid[i], q2};
      t.offer(abs_a2(rel.solve(pt)), pt);
    }
  Rng rng(scan.seed);
  for (int n = 0; n < scan.random_points; ++n) {
    const RelaxedPoint pt{random_in_disc(rng), random_in_disc(rng), random_in_disc(rng)};
    t.offer(abs_a2(rel.solve(pt)), pt);
  }
  // a2^2 is linear in p2 + q2, so |p2 + q2| = 4 is extremal.
  for (int j = 0; j < scan.phases; ++j) {
    const cplx e = std::polar(2.0, kTwoPi * j / scan.phases);
    const RelaxedPoint pt{e, e, e};
    t.offer(abs_a2(rel.solve(pt)), pt);
  }
  return t.best;
}

RelaxedMax relaxed_max_a3(const ClassSpec& spec, const RelaxedScan& scan) {
  const ProofRelations rel(spec);
  const std::vector<cplx> grid = polar_grid(scan);
  Tracker t;
  for (const cplx& p1 : grid)
    for (const cplx& p2 : grid)
      for (const cplx& q2 : grid) {
        const RelaxedPoint pt{p1, p2, q2};
        t.offer(std::abs(rel.solve(pt).a3), pt);
      }
  Rng rng(scan.seed);
  for (int n = 0; n < scan.random_points; ++n) {
    const RelaxedPoint pt{random_in_disc(rng), random_in_disc(rng), random_in_disc(rng)};
    t.offer(std::abs(rel.solve(pt).a3), pt);
  }

  // a3 = T (p2 - q2) + U p1 + V p1^2. Recover T, U, V by probing, then align
  // the phases of the three contributions at the polydisc boundary.
  const cplx T = rel.solve({0.0, 1.0, 0.0}).a3;
  const cplx plus = rel.solve({1.0, 0.0, 0.0}).a3;
  const cplx minus = rel.solve({-1.0, 0.0, 0.0}).a3;
  const cplx U = 0.5 * (plus - minus);
  const cplx V = 0.5 * (plus + minus);
  double beta = 0.0, target = 0.0;
  if (std::abs(U) > 0.0 && std::abs(V) > 0.0) {
    beta = std::arg(U) - std::arg(V);
    target = std::arg(U) + beta;
  } else if (std::abs(U) > 0.0) {
    target = std::arg(U);
  } else if (std::abs(V) > 0.0) {
    target = std::arg(V);
  }
  const cplx p1 = std::polar(2.0, beta);
  const cplx p2 = std::polar(2.0, target - (std::abs(T) > 0.0 ? std::arg(T) : 0.0));
  const RelaxedPoint extreme{p1, p2, -p2};
  t.offer(std::abs(rel.solve(extreme).a3), extreme);
  return t.best;
}

SampleRecord realizable_sample(const ProofRelations& rel, const BoundReport& bounds,
                               std::uint64_t seed, int atoms) {
  Rng rng(seed);
  const CaratheodoryAtoms a = CaratheodoryAtoms::random(rng, atoms);
  const ComplexSeries p = herglotz_sample(a, 2);
  const ComplexSeries q = herglotz_sample(a.reflected(), 2);
  SampleRecord r;
  r.seed = seed;
  r.p1 = p[1];
  r.p2 = p[2];
  r.q2 = q[2];
  const ProofSolution s = rel.solve({r.p1, r.p2, r.q2});
  r.abs_a2 = abs_a2(s);
  r.abs_a3 = std::abs(s.a3);
  r.bound_a2 = bounds.a2_bound;
  r.bound_a3 = bounds.a3_bound;
  r.margin_a2 = r.bound_a2 - r.abs_a2;
  r.margin_a3 = r.bound_a3 - r.abs_a3;
  return r;
}

std::vector<SampleRecord> sample_realizable(const ClassSpec& spec, long count,
                                            std::uint64_t base_seed, int atoms, int threads) {
  if (count < 0) throw ValidationError("sample count must be >= 0");
  const BoundReport bounds = compute_bounds(spec);
  if (bounds.degenerate) throw DegenerateError(bounds.degenerate_reason);
  const ProofRelations rel(spec);
  std::vector<SampleRecord> out(static_cast<std::size_t>(count));
  if (count == 0) return out;

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>((count + 999) / 1000)));
  auto run = [&](long begin, long end) {
    for (long i = begin; i < end; ++i)
      out[static_cast<std::size_t>(i)] =
          realizable_sample(rel, bounds, derive_seed(base_seed, static_cast<std::uint64_t>(i)), atoms);
  };
  if (workers == 1) {
    run(0, count);
    return out;
  }
  std::vector<std::jthread> pool;
  const long chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const long begin = static_cast<long>(w) * chunk;
    const long end = std::min(count, begin + chunk);
    if (begin < end) pool.emplace_back(run, begin, end);
  }
  pool.clear();  // join before `out` is handed back
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string sample_csv_header() {
  return "seed,p1_re,p1_im,p2_re,p2_im,q2_re,q2_im,abs_a2,abs_a3,bound_a2,bound_a3,margin_a2,"
         "margin_a3";
}

std::string to_csv_row(const SampleRecord& r) {
  std::string s = std::to_string(r.seed);
  for (double x : {r.p1.real(), r.p1.imag(), r.p2.real(), r.p2.imag(), r.q2.real(), r.q2.imag(),
                   r.abs_a2, r.abs_a3, r.bound_a2, r.bound_a3, r.margin_a2, r.margin_a3}) {
    s += ',';
    s += format_double(x);
  }
  return s;
}

}  // namespace bibaz
