#include "bibaz/config.hpp"

#include "bibaz/error.hpp"

namespace bibaz {

OperatorSpec OperatorConfig::resolve() const {
  if (preset == "identity") return OperatorSpec::identity();
  if (preset == "libera-bernardi") return OperatorSpec::libera_bernardi(nu);
  if (preset == "jung-kim-srivastava") return OperatorSpec::jung_kim_srivastava(sigma);
  if (preset == "custom") return OperatorSpec::make(mu, b);
  throw ValidationError("unknown operator preset '" + preset +
                        "' (identity|libera-bernardi|jung-kim-srivastava|custom)");
}

TargetPhi PhiConfig::resolve() const {
  if (preset == "custom") return TargetPhi::make(B1, B2, B3);
  switch (parse_phi_preset(preset)) {
    case PhiPreset::koebe: return phi_koebe();
    case PhiPreset::strongly_starlike: return phi_strongly_starlike(alpha);
    case PhiPreset::janowski: return phi_janowski(A, B);
    case PhiPreset::starlike_order: return phi_starlike_order(beta);
  }
  throw ValidationError("unreachable phi preset");
}

ClassSpec ClassConfig::resolve() const {
  ClassSpec spec;
  spec.kind = kind;
  spec.gamma = gamma;
  spec.lambda = lambda;
  spec.op = op.resolve();
  spec.phi = phi.resolve();
  spec.psi = MultiplierPsi::make(c0, c1, unchecked_psi);
  spec.validate();
  return spec;
}

namespace {

void require_preset(const std::string& have, const char* want, const std::string& axis) {
  if (have != want)
    throw ValidationError("axis '" + axis + "' needs preset '" + want + "', have '" + have + "'");
}

}  // namespace

void set_axis(ClassConfig& cfg, const std::string& axis, double value) {
  if (axis == "lambda") {
    cfg.lambda = value;
  } else if (axis == "gamma") {
    cfg.gamma = value;
  } else if (axis == "c0") {
    cfg.c0 = value;
  } else if (axis == "c1") {
    cfg.c1 = value;
  } else if (axis == "mu") {
    require_preset(cfg.op.preset, "custom", axis);
    cfg.op.mu = value;
  } else if (axis == "b") {
    require_preset(cfg.op.preset, "custom", axis);
    cfg.op.b = value;
  } else if (axis == "nu") {
    require_preset(cfg.op.preset, "libera-bernardi", axis);
    cfg.op.nu = value;
  } else if (axis == "sigma") {
    require_preset(cfg.op.preset, "jung-kim-srivastava", axis);
    cfg.op.sigma = value;
  } else if (axis == "alpha") {
    require_preset(cfg.phi.preset, "strongly-starlike", axis);
    cfg.phi.alpha = value;
  } else if (axis == "A") {
    require_preset(cfg.phi.preset, "janowski", axis);
    cfg.phi.A = value;
  } else if (axis == "B") {
    require_preset(cfg.phi.preset, "janowski", axis);
    cfg.phi.B = value;
  } else if (axis == "beta") {
    require_preset(cfg.phi.preset, "starlike-order", axis);
    cfg.phi.beta = value;
  } else if (axis == "B1") {
    require_preset(cfg.phi.preset, "custom", axis);
    cfg.phi.B1 = value;
  } else if (axis == "B2") {
    require_preset(cfg.phi.preset, "custom", axis);
    cfg.phi.B2 = value;
  } else {
    throw ValidationError("unknown sweep axis '" + axis + "'");
  }
}

}  // namespace bibaz
