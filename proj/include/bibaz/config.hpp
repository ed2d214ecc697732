#ifndef BIBAZ_CONFIG_HPP
#define BIBAZ_CONFIG_HPP

// User-facing class description: presets plus their parameters, resolved on
// demand into a validated ClassSpec. This is what spec files and CLI flags
// populate and what parameter sweeps mutate.

#include <optional>
#include <string>

#include "bibaz/bounds.hpp"

namespace bibaz {

struct OperatorConfig {
  // identity | libera-bernardi | jung-kim-srivastava | custom
  std::string preset = "identity";
  double nu = 1.0;
  double sigma = 1.0;
  cplx mu{0.0, 0.0};
  cplx b{1.0, 0.0};

  OperatorSpec resolve() const;
};

struct PhiConfig {
  // koebe | strongly-starlike | janowski | starlike-order | custom
  std::string preset = "koebe";
  double alpha = 1.0;
  double A = 1.0;
  double B = -1.0;
  double beta = 0.0;
  double B1 = 2.0;
  double B2 = 2.0;
  std::optional<double> B3;

  TargetPhi resolve() const;
};

struct ClassConfig {
  ClassKind kind = ClassKind::B;
  cplx gamma{1.0, 0.0};
  double lambda = 0.0;
  OperatorConfig op;
  PhiConfig phi;
  cplx c0{1.0, 0.0};
  cplx c1{0.0, 0.0};
  bool unchecked_psi = false;

  ClassSpec resolve() const;
};

// Sets one named scalar parameter (lambda, gamma, mu, b, nu, sigma, alpha, A,
// B, beta, B1, B2, c0, c1). Preset-specific axes require the matching preset.
void set_axis(ClassConfig& cfg, const std::string& axis, double value);

}  // namespace bibaz

#endif
