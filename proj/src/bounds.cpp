#include "bibaz/bounds.hpp"

#include <cmath>
#include <sstream>

#include "bibaz/error.hpp"

namespace bibaz {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_kind(const ClassSpec& spec, ClassKind kind, const char* what) {
  spec.validate();
  if (spec.kind != kind)
    throw ValidationError(std::string(what) + " needs a class of kind " + to_string(kind));
}

void require_theta(double t2, double t3) {
  if (t2 <= kDegenerateTol || t3 <= kDegenerateTol)
    throw DegenerateError("Theta_2 or Theta_3 vanishes (" + num(t2) + ", " + num(t3) + ")");
}

double a2_from_denominator(double numerator, double denominator, const char* which) {
  if (!(denominator > kDegenerateTol))
    throw DegenerateError(std::string(which) + " |a2| denominator is degenerate (" +
                          num(denominator) + ")");
  return numerator / std::sqrt(denominator);
}

}  // namespace

TargetPhi TargetPhi::make(double B1, double B2, std::optional<double> B3) {
  TargetPhi phi{B1, B2, B3, "custom"};
  phi.validate();
  return phi;
}

void TargetPhi::validate() const {
  if (!std::isfinite(B1) || !std::isfinite(B2) || (B3 && !std::isfinite(*B3)))
    throw ValidationError("phi coefficients must be finite");
  if (!(B1 > 0.0)) throw ValidationError("phi needs B1 > 0, got " + num(B1));
}

PhiPreset parse_phi_preset(const std::string& name) {
  if (name == "koebe") return PhiPreset::koebe;
  if (name == "strongly-starlike") return PhiPreset::strongly_starlike;
  if (name == "janowski") return PhiPreset::janowski;
  if (name == "starlike-order" || name == "starlike-order-beta") return PhiPreset::starlike_order;
  throw ValidationError("unknown phi preset '" + name + "'");
}

std::string to_string(PhiPreset p) {
  switch (p) {
    case PhiPreset::koebe: return "koebe";
    case PhiPreset::strongly_starlike: return "strongly-starlike";
    case PhiPreset::janowski: return "janowski";
    case PhiPreset::starlike_order: return "starlike-order";
  }
  return "?";
}

TargetPhi phi_strongly_starlike(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ValidationError("strongly-starlike needs 0 < alpha <= 1, got " + num(alpha));
  // exp(alpha log((1+z)/(1-z))) with log((1+z)/(1-z)) = 2z + 2z^3/3 + ...
  TargetPhi phi = TargetPhi::make(2.0 * alpha, 2.0 * alpha * alpha,
                                  (2.0 * alpha + 4.0 * alpha * alpha * alpha) / 3.0);
  phi.label = "strongly-starlike";
  return phi;
}

TargetPhi phi_janowski(double A, double B) {
  if (!(B >= -1.0 && B < A && A <= 1.0))
    throw ValidationError("janowski needs -1 <= B < A <= 1, got A=" + num(A) + " B=" + num(B));
  TargetPhi phi = TargetPhi::make(A - B, -B * (A - B), B * B * (A - B));
  phi.label = "janowski";
  return phi;
}

TargetPhi phi_starlike_order(double beta) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw ValidationError("starlike-order needs 0 <= beta < 1, got " + num(beta));
  const double c = 2.0 * (1.0 - beta);
  TargetPhi phi = TargetPhi::make(c, c, c);
  phi.label = "starlike-order";
  return phi;
}

TargetPhi phi_koebe() {
  TargetPhi phi = TargetPhi::make(2.0, 2.0, 2.0);
  phi.label = "koebe";
  return phi;
}

MultiplierPsi MultiplierPsi::make(cplx C0, cplx C1, bool unchecked) {
  MultiplierPsi psi{C0, C1, unchecked};
  psi.validate();
  return psi;
}

void MultiplierPsi::validate() const {
  if (!std::isfinite(std::abs(C0)) || !std::isfinite(std::abs(C1)))
    throw ValidationError("psi coefficients must be finite");
  if (!unchecked && std::abs(C0) > 1.0)
    throw ValidationError("psi needs |C0| <= 1, got " + num(std::abs(C0)) +
                          " (pass the unchecked flag to override)");
}

ClassKind parse_class_kind(const std::string& name) {
  if (name == "B" || name == "b") return ClassKind::B;
  if (name == "G" || name == "g") return ClassKind::G;
  throw ValidationError("unknown class kind '" + name + "' (B|G)");
}

std::string to_string(ClassKind k) { return k == ClassKind::B ? "B" : "G"; }

void ClassSpec::validate() const {
  if (!std::isfinite(gamma.real()) || !std::isfinite(gamma.imag()))
    throw ValidationError("gamma must be finite");
  if (gamma == cplx{0.0, 0.0}) throw ValidationError("gamma must be nonzero");
  if (!std::isfinite(lambda)) throw ValidationError("lambda must be finite");
  if (kind == ClassKind::B && lambda < 0.0)
    throw ValidationError("class B needs lambda >= 0, got " + num(lambda));
  if (kind == ClassKind::G && !(lambda >= 0.0 && lambda < 1.0))
    throw ValidationError("class G needs 0 <= lambda < 1, got " + num(lambda));
  op.validate();
  phi.validate();
  psi.validate();
}

double a2_denominator_B(const ClassSpec& spec) {
  const double l = spec.lambda;
  const double t2 = spec.theta2(), t3 = spec.theta3();
  const double B1 = spec.phi.B1, B2 = spec.phi.B2;
  const cplx d = spec.gamma * spec.psi.C0 * B1 * B1 *
                     ((l - 1.0) * (l + 2.0) * t2 * t2 + 2.0 * (l + 2.0) * t3) -
                 2.0 * (B2 - B1) * (1.0 + l) * (1.0 + l) * t2 * t2;
  return std::abs(d);
}

double a2_denominator_G(const ClassSpec& spec) {
  const double l = spec.lambda;
  const double t2 = spec.theta2(), t3 = spec.theta3();
  const double B1 = spec.phi.B1, B2 = spec.phi.B2;
  const cplx gc = spec.gamma * spec.psi.C0;
  const cplx d = (gc * (l * l - 1.0) * B1 * B1 + (1.0 - l) * (1.0 - l) * (B1 - B2)) * t2 * t2 +
                 2.0 * gc * (1.0 - l) * B1 * B1 * t3;
  return std::abs(d);
}

double bound_a2_B(const ClassSpec& spec) {
  require_kind(spec, ClassKind::B, "bound_a2_B");
  const double B1 = spec.phi.B1;
  const double numer = std::abs(spec.gamma) * std::abs(spec.psi.C0) * B1 * std::sqrt(2.0 * B1);
  return a2_from_denominator(numer, a2_denominator_B(spec), "class B");
}

double bound_a3_B(const ClassSpec& spec) {
  require_kind(spec, ClassKind::B, "bound_a3_B");
  const double t2 = spec.theta2(), t3 = spec.theta3();
  require_theta(t2, t3);
  const double l = spec.lambda, B1 = spec.phi.B1;
  const double g = std::abs(spec.gamma), c0 = std::abs(spec.psi.C0), c1 = std::abs(spec.psi.C1);
  const double sq = g * c0 * B1 / ((1.0 + l) * t2);
  return g * c0 * B1 / ((l + 2.0) * t3) + g * c1 * B1 / ((l + 2.0) * t3) + sq * sq;
}

double bound_a2_G(const ClassSpec& spec) {
  require_kind(spec, ClassKind::G, "bound_a2_G");
  const double B1 = spec.phi.B1;
  const double numer = std::abs(spec.gamma) * std::abs(spec.psi.C0) * B1 * std::sqrt(B1);
  return a2_from_denominator(numer, a2_denominator_G(spec), "class G");
}

namespace {

double bound_a3_G_impl(const ClassSpec& spec, double gamma_power) {
  require_kind(spec, ClassKind::G, "bound_a3_G");
  const double t2 = spec.theta2(), t3 = spec.theta3();
  require_theta(t2, t3);
  const double l = spec.lambda, B1 = spec.phi.B1;
  const double g = std::abs(spec.gamma), c0 = std::abs(spec.psi.C0), c1 = std::abs(spec.psi.C1);
  const double one = 1.0 - l;
  return g * c1 * B1 / (2.0 * one * t3) + g * c0 * B1 / (2.0 * one * t3) +
         std::pow(g, gamma_power) * c0 * c0 * B1 * B1 / (one * one * t2 * t2);
}

}  // namespace

double bound_a3_G(const ClassSpec& spec) { return bound_a3_G_impl(spec, 1.0); }

double bound_a3_G_rederived(const ClassSpec& spec) { return bound_a3_G_impl(spec, 2.0); }

double bound_a2(const ClassSpec& spec) {
  return spec.kind == ClassKind::B ? bound_a2_B(spec) : bound_a2_G(spec);
}

double bound_a3(const ClassSpec& spec) {
  return spec.kind == ClassKind::B ? bound_a3_B(spec) : bound_a3_G_rederived(spec);
}

BoundReport compute_bounds(const ClassSpec& spec) {
  spec.validate();
  BoundReport r;
  r.theta2 = spec.theta2();
  r.theta3 = spec.theta3();
  try {
    r.a2_bound = bound_a2(spec);
    r.a3_bound = bound_a3(spec);
  } catch (const DegenerateError& e) {
    r.degenerate = true;
    r.degenerate_reason = e.what();
    r.a2_bound = 0.0;
    r.a3_bound = 0.0;
    return r;
  }
  if (spec.kind == ClassKind::G) {
    r.a3_bound_linear_gamma = bound_a3_G(spec);
    if (std::abs(*r.a3_bound_linear_gamma - r.a3_bound) > 1e-12 * std::max(1.0, r.a3_bound)) {
      r.warnings.push_back(
          "class G |a3|: the estimate with |gamma| in its third term understates the "
          "relaxed maximum, whose third term carries |gamma|^2; |gamma| form=" +
          num(*r.a3_bound_linear_gamma) + " |gamma|^2 form=" + num(r.a3_bound));
    }
  }
  return r;
}

Corollary parse_corollary(const std::string& name) {
  if (name == "sss1") return Corollary::sss1;
  if (name == "bi-cor1") return Corollary::bi_cor1;
  if (name == "sss1a") return Corollary::sss1a;
  if (name == "mmm1") return Corollary::mmm1;
  throw ValidationError("unknown corollary '" + name + "' (sss1|bi-cor1|sss1a|mmm1)");
}

std::string to_string(Corollary c) {
  switch (c) {
    case Corollary::sss1: return "sss1";
    case Corollary::bi_cor1: return "bi-cor1";
    case Corollary::sss1a: return "sss1a";
    case Corollary::mmm1: return "mmm1";
  }
  return "?";
}

BoundReport corollary_bounds(Corollary which, const CorollaryParams& p) {
  BoundReport r;
  const bool identity = which == Corollary::sss1a || which == Corollary::mmm1;
  const double t2 = identity ? 1.0 : p.theta2;
  const double t3 = identity ? 1.0 : p.theta3;
  r.theta2 = t2;
  r.theta3 = t3;
  if (t2 <= kDegenerateTol || t3 <= kDegenerateTol) {
    r.degenerate = true;
    r.degenerate_reason = "Theta_2 or Theta_3 vanishes";
    return r;
  }
  const double g = std::abs(p.gamma), c0 = std::abs(p.C0), c1 = std::abs(p.C1);
  const double B1 = p.B1, B2 = p.B2;
  const cplx gc = p.gamma * p.C0;
  const double numer = g * c0 * B1 * std::sqrt(B1);
  double den = 0.0;
  switch (which) {
    case Corollary::sss1:
      den = std::abs(gc * B1 * B1 * (2.0 * t3 - t2 * t2) - (B2 - B1) * t2 * t2);
      r.a3_bound = g * c0 * B1 / (2.0 * t3) + g * c1 * B1 / (2.0 * t3) +
                   std::pow(g * c0 * B1 / t2, 2);
      break;
    case Corollary::bi_cor1:
      den = std::abs(3.0 * gc * B1 * B1 * t3 - 4.0 * (B2 - B1) * t2 * t2);
      r.a3_bound = g * c0 * B1 / (3.0 * t3) + g * c1 * B1 / (3.0 * t3) +
                   std::pow(g * c0 * B1 / (2.0 * t2), 2);
      break;
    case Corollary::sss1a:
      den = std::abs(gc * B1 * B1 - (B2 - B1));
      r.a3_bound = g * c0 * B1 / 2.0 + g * c1 * B1 / 2.0 + std::pow(g * c0 * B1, 2);
      break;
    case Corollary::mmm1:
      den = std::abs(3.0 * gc * B1 * B1 - 4.0 * (B2 - B1));
      r.a3_bound = g * c0 * B1 / 3.0 + g * c1 * B1 / 3.0 + std::pow(g * c0 * B1 / 2.0, 2);
      break;
  }
  if (!(den > kDegenerateTol)) {
    r.degenerate = true;
    r.degenerate_reason = to_string(which) + " |a2| denominator is degenerate (" + num(den) + ")";
    r.a2_bound = 0.0;
    r.a3_bound = 0.0;
    return r;
  }
  r.a2_bound = numer / std::sqrt(den);
  return r;
}

}  // namespace bibaz
