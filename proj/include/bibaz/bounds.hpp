#ifndef BIBAZ_BOUNDS_HPP
#define BIBAZ_BOUNDS_HPP

// Closed-form |a_2| and |a_3| estimates for the bi-Bazilevic classes B and G
// built on J_mu^b, with the target-function presets.

#include <optional>
#include <string>
#include <vector>

#include "bibaz/hlzeta.hpp"
#include "bibaz/series.hpp"

namespace bibaz {

inline constexpr double kDegenerateTol = 1e-12;

// phi(z) = 1 + B1 z + B2 z^2 + B3 z^3 + ..., B1 > 0, real coefficients.
struct TargetPhi {
  double B1 = 2.0;
  double B2 = 2.0;
  std::optional<double> B3;
  std::string label = "custom";

  static TargetPhi make(double B1, double B2, std::optional<double> B3 = std::nullopt);
  void validate() const;
};

enum class PhiPreset { koebe, strongly_starlike, janowski, starlike_order };

PhiPreset parse_phi_preset(const std::string& name);
std::string to_string(PhiPreset p);

// ((1+z)/(1-z))^alpha, 0 < alpha <= 1.
TargetPhi phi_strongly_starlike(double alpha);
// (1+Az)/(1+Bz), -1 <= B < A <= 1.
TargetPhi phi_janowski(double A, double B);
// (1+(1-2 beta)z)/(1-z), 0 <= beta < 1.
TargetPhi phi_starlike_order(double beta);
// (1+z)/(1-z).
TargetPhi phi_koebe();

// psi(z) = C0 + C1 z + ...; |C0| <= 1 unless `unchecked`.
struct MultiplierPsi {
  cplx C0{1.0, 0.0};
  cplx C1{0.0, 0.0};
  bool unchecked = false;

  static MultiplierPsi make(cplx C0, cplx C1, bool unchecked = false);
  void validate() const;
};

enum class ClassKind { B, G };

ClassKind parse_class_kind(const std::string& name);
std::string to_string(ClassKind k);

struct ClassSpec {
  cplx gamma{1.0, 0.0};
  double lambda = 0.0;
  ClassKind kind = ClassKind::B;
  OperatorSpec op = OperatorSpec::identity();
  TargetPhi phi;
  MultiplierPsi psi;

  // gamma != 0; B: lambda >= 0; G: 0 <= lambda < 1; plus member validation.
  void validate() const;
  double theta2() const { return theta(2, op); }
  double theta3() const { return theta(3, op); }
};

struct BoundReport {
  double a2_bound = 0.0;
  double a3_bound = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  bool degenerate = false;
  std::string degenerate_reason;
  // Kind G only: the |a_3| expression with |gamma| (not |gamma|^2) in the
  // third term, kept alongside the value the coefficient relations support.
  std::optional<double> a3_bound_linear_gamma;
  std::vector<std::string> warnings;
};

// Modulus under the square root of the |a_2| bound for kind B.
double a2_denominator_B(const ClassSpec& spec);
// Modulus under the square root of the |a_2| bound for kind G.
double a2_denominator_G(const ClassSpec& spec);

// These throw DegenerateError when a denominator is below kDegenerateTol and
// ValidationError when the spec has the wrong kind or is invalid.
double bound_a2_B(const ClassSpec& spec);
double bound_a3_B(const ClassSpec& spec);
double bound_a2_G(const ClassSpec& spec);
// Third term |gamma||C0|^2 B1^2 / ((1-lambda)^2 Theta_2^2).
double bound_a3_G(const ClassSpec& spec);
// Re-derived from the class-G coefficient relations: third term carries
// |gamma|^2, matching the kind-B estimate at lambda = 0.
double bound_a3_G_rederived(const ClassSpec& spec);

double bound_a2(const ClassSpec& spec);
// Kind G uses bound_a3_G_rederived.
double bound_a3(const ClassSpec& spec);

// Full report. Never throws DegenerateError; degeneracy is flagged instead.
BoundReport compute_bounds(const ClassSpec& spec);

enum class Corollary {
  sss1,     // lambda = 0
  bi_cor1,  // lambda = 1
  sss1a,    // lambda = 0, identity operator
  mmm1,     // lambda = 1, identity operator
};

Corollary parse_corollary(const std::string& name);
std::string to_string(Corollary c);

struct CorollaryParams {
  cplx gamma{1.0, 0.0};
  cplx C0{1.0, 0.0};
  cplx C1{0.0, 0.0};
  double B1 = 2.0;
  double B2 = 2.0;
  double theta2 = 1.0;  // ignored by sss1a / mmm1
  double theta3 = 1.0;
};

BoundReport corollary_bounds(Corollary which, const CorollaryParams& p);

}  // namespace bibaz

#endif
