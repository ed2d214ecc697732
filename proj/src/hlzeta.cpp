#include "bibaz/hlzeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bibaz/error.hpp"

namespace bibaz {

namespace {

// (x)^(-s) on the principal branch.
cplx principal_inverse_power(cplx x, cplx s) { return std::exp(-s * std::log(x)); }

}  // namespace

bool is_nonpositive_integer(cplx a, double tol) {
  if (std::abs(a.imag()) > tol) return false;
  if (a.real() > tol) return false;
  return std::abs(a.real() - std::round(a.real())) <= tol;
}

OperatorSpec OperatorSpec::make(cplx mu, cplx b) {
  OperatorSpec spec{mu, b};
  spec.validate();
  return spec;
}

OperatorSpec OperatorSpec::identity() { return OperatorSpec{0.0, 1.0}; }

OperatorSpec OperatorSpec::libera_bernardi(double nu) {
  if (!std::isfinite(nu) || nu <= -1.0)
    throw ValidationError("libera-bernardi needs nu > -1, got " + std::to_string(nu));
  return make(1.0, nu);
}

OperatorSpec OperatorSpec::jung_kim_srivastava(double sigma) {
  if (!std::isfinite(sigma) || sigma <= 0.0)
    throw ValidationError("jung-kim-srivastava needs sigma > 0, got " + std::to_string(sigma));
  return make(sigma, 1.0);
}

void OperatorSpec::validate() const {
  if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()) || !std::isfinite(b.real()) ||
      !std::isfinite(b.imag()))
    throw ValidationError("operator parameters must be finite");
  if (is_nonpositive_integer(b))
    throw ValidationError("operator shift b must avoid {0, -1, -2, ...}");
}

HlzetaSum hlzeta_eval(cplx z, cplx s, cplx a, double tol) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw ValidationError("hlzeta_eval: series form needs |z| < 1");
  if (is_nonpositive_integer(a)) throw ValidationError("hlzeta_eval: a must avoid {0, -1, -2, ...}");
  if (!(tol > 0.0)) throw ValidationError("hlzeta_eval: tol must be positive");

  HlzetaSum out;
  cplx zk = 1.0;
  double rk = 1.0;  // |z|^k
  for (int k = 0; k < kHlzetaMaxTerms; ++k) {
    out.value += zk * principal_inverse_power(static_cast<double>(k) + a, s);
    zk *= z;
    rk *= r;
    out.terms = k + 1;
    if (rk == 0.0) {
      out.tail_bound = 0.0;
      return out;
    }
    // Remainder sum_{j>k}: the first omitted term bounds the rest geometrically
    // once |j+a| is increasing and |arg(j+a)| decreasing in j.
    const cplx next = static_cast<double>(k + 1) + a;
    if (next.real() <= 0.0) continue;
    const double mag = std::abs(next);
    const double grow = std::max(0.0, -s.real());
    const double ratio = r * std::pow(1.0 + 1.0 / mag, grow);
    if (ratio >= 1.0) continue;
    const double first =
        rk * std::pow(mag, -s.real()) * std::exp(std::abs(s.imag()) * std::abs(std::arg(next)));
    const double bound = first / (1.0 - ratio);
    if (bound < tol) {
      out.tail_bound = bound;
      return out;
    }
  }
  throw ConvergenceError("hlzeta_eval: tail bound not met within " +
                         std::to_string(kHlzetaMaxTerms) + " terms");
}

cplx kernel_coefficient(int k, const OperatorSpec& spec) {
  if (k < 1) throw ValidationError("kernel coefficient index must be >= 1");
  if (spec.mu == cplx{0.0, 0.0}) return 1.0;
  const cplx ratio = (1.0 + spec.b) / (static_cast<double>(k) + spec.b);
  if (ratio == cplx{0.0, 0.0}) {
    if (spec.mu.real() <= 0.0) throw DegenerateError("singular power of a zero ratio");
    return 0.0;
  }
  return std::exp(spec.mu * std::log(ratio));
}

double theta(int k, const OperatorSpec& spec) {
  if (k < 2) throw ValidationError("theta needs k >= 2");
  return std::abs(kernel_coefficient(k, spec));
}

ThetaSequence::ThetaSequence(const OperatorSpec& spec, int max_k) {
  if (max_k < 2) throw ValidationError("theta sequence needs max_k >= 2");
  values_.reserve(static_cast<std::size_t>(max_k - 1));
  for (int k = 2; k <= max_k; ++k) {
    const double t = theta(k, spec);
    if (!std::isfinite(t)) throw DegenerateError("theta_" + std::to_string(k) + " is not finite");
    values_.push_back(t);
  }
}

double ThetaSequence::at(int k) const {
  if (k < 2 || k > max_k()) throw std::out_of_range("theta index " + std::to_string(k));
  return values_[static_cast<std::size_t>(k - 2)];
}

ComplexSeries kernel_series(const OperatorSpec& spec, int order) {
  spec.validate();
  ComplexSeries g(order);
  for (int k = 1; k <= order; ++k) g.set(k, kernel_coefficient(k, spec));
  return g;
}

OperatorVariant parse_operator_variant(const std::string& name) {
  if (name == "modulus") return OperatorVariant::modulus;
  if (name == "complex") return OperatorVariant::complex;
  throw ValidationError("unknown operator variant '" + name + "' (modulus|complex)");
}

std::string to_string(OperatorVariant v) {
  return v == OperatorVariant::modulus ? "modulus" : "complex";
}

NormalizedSeries apply_operator(const OperatorSpec& spec, const NormalizedSeries& f,
                                OperatorVariant variant) {
  spec.validate();
  if (variant == OperatorVariant::complex)
    return NormalizedSeries(hadamard(f.series(), kernel_series(spec, f.order())));
  ComplexSeries out = f.series();
  for (int k = 2; k <= f.order(); ++k) out.set(k, theta(k, spec) * f[k]);
  return NormalizedSeries(std::move(out));
}

}  // namespace bibaz
