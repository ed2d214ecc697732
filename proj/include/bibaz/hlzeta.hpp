#ifndef BIBAZ_HLZETA_HPP
#define BIBAZ_HLZETA_HPP

// Hurwitz-Lerch zeta function and the Srivastava-Attiya convolution operator
// J_mu^b, realized as a coefficient multiplier on normalized series.

#include <string>
#include <vector>

#include "bibaz/series.hpp"

namespace bibaz {

// (mu, b) with b outside {0, -1, -2, ...}.
struct OperatorSpec {
  cplx mu{0.0, 0.0};
  cplx b{1.0, 0.0};

  // Throws ValidationError when b is (within 1e-12) a nonpositive integer.
  static OperatorSpec make(cplx mu, cplx b);
  static OperatorSpec identity();
  // mu = 1, b = nu (nu > -1): Libera-Bernardi.
  static OperatorSpec libera_bernardi(double nu);
  // mu = sigma (sigma > 0), b = 1: Jung-Kim-Srivastava.
  static OperatorSpec jung_kim_srivastava(double sigma);

  void validate() const;
};

bool is_nonpositive_integer(cplx a, double tol = 1e-12);

struct HlzetaSum {
  cplx value;
  int terms = 0;        // number of summed terms k = 0..terms-1
  double tail_bound = 0.0;  // certified bound on the omitted remainder
};

inline constexpr int kHlzetaMaxTerms = 1'000'000;

// Phi(z, s, a) = sum_{k>=0} z^k / (k+a)^s for |z| < 1, summed until the
// geometric tail bound drops below tol. Principal branch for (k+a)^{-s}.
HlzetaSum hlzeta_eval(cplx z, cplx s, cplx a, double tol = 1e-14);

// ((1+b)/(k+b))^mu on the principal branch.
cplx kernel_coefficient(int k, const OperatorSpec& spec);

// Theta_k = |((1+b)/(k+b))^mu| for k >= 2.
double theta(int k, const OperatorSpec& spec);

// Theta_2 .. Theta_N.
class ThetaSequence {
 public:
  ThetaSequence(const OperatorSpec& spec, int max_k);
  double at(int k) const;
  int max_k() const { return static_cast<int>(values_.size()) + 1; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Coefficients of G_mu^b: z + sum_{k>=2} ((1+b)/(k+b))^mu z^k, order N.
ComplexSeries kernel_series(const OperatorSpec& spec, int order);

enum class OperatorVariant {
  modulus,  // a_k -> Theta_k a_k, the multiplier with absolute value bars
  complex,  // Hadamard product with kernel_series
};

OperatorVariant parse_operator_variant(const std::string& name);
std::string to_string(OperatorVariant v);

NormalizedSeries apply_operator(const OperatorSpec& spec, const NormalizedSeries& f,
                                OperatorVariant variant = OperatorVariant::modulus);

}  // namespace bibaz

#endif
