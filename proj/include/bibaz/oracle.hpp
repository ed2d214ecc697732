#ifndef BIBAZ_ORACLE_HPP
#define BIBAZ_ORACLE_HPP

// Executable version of the coefficient-bound proofs.
//
//  * Caratheodory sampling: finite Herglotz averages p(z) = sum mu_j (1+x_j z)/(1-x_j z).
//  * Quasi-subordination and class residuals computed on truncated series.
//  * The coefficient relations solved for a_2^2 and a_3 from (p_1, p_2, q_2),
//    with q_1 = -p_1.
//  * A brute-force maximizer of |a_2|, |a_3| over the polydisc |p_k|, |q_k| <= 2
//    that the closed-form estimates must reproduce.

#include <cstdint>
#include <string>
#include <vector>

#include "bibaz/bounds.hpp"
#include "bibaz/rng.hpp"
#include "bibaz/series.hpp"

namespace bibaz {

inline constexpr int kDefaultAtoms = 3;

struct CaratheodoryAtoms {
  std::vector<double> weights;  // >= 0, summing to 1 within 1e-12
  std::vector<double> angles;   // in [0, 2 pi)

  void validate() const;
  // Dirichlet(1,...,1) weights and uniform angles.
  static CaratheodoryAtoms random(Rng& rng, int count);
  // theta -> theta + pi: negates every odd coefficient of the sample.
  CaratheodoryAtoms reflected() const;
};

// 1 + sum_k 2 (sum_j mu_j e^{i k theta_j}) z^k, order N.
ComplexSeries herglotz_sample(const CaratheodoryAtoms& atoms, int order);

// u = (p - 1)/(p + 1) for p_0 = 1.
ComplexSeries schwarz_from_p(const ComplexSeries& p);

// max_k |f_k - [psi (phi o w)]_k| over the shared order.
double quasi_sub_residual(const ComplexSeries& f, const ComplexSeries& phi,
                          const ComplexSeries& psi, const ComplexSeries& w);

// 1 + B1 z + B2 z^2 (+ B3 z^3 when known).
ComplexSeries phi_series(const TargetPhi& phi);
// C0 + C1 z.
ComplexSeries psi_series(const MultiplierPsi& psi);

// (1/gamma)(z^{1-lambda} (Jf)' / (Jf)^{1-lambda} - 1) via (Jf)' ((Jf)/z)^{lambda-1}.
ComplexSeries bazilevic_lhs(const NormalizedSeries& f, const ClassSpec& spec);
// (1/gamma)((Jf)' - 1): the lambda = 1 form, independent of fractional_power.
ComplexSeries bazilevic_lhs_unit_lambda(const NormalizedSeries& f, const ClassSpec& spec);
// (1/gamma)(z (Jf)' / ((1-lambda) Jf + lambda z (Jf)') - 1).
ComplexSeries g_class_lhs(const NormalizedSeries& f, const ClassSpec& spec);
// psi(z) (phi(u(z)) - 1).
ComplexSeries class_rhs(const ClassSpec& spec, const ComplexSeries& u);

// Coefficient residuals through order 2. J uses the modulus multiplier Theta_k.
double class_residual_B(const NormalizedSeries& f, const ClassSpec& spec, const ComplexSeries& u);
double class_residual_G(const NormalizedSeries& f, const ClassSpec& spec, const ComplexSeries& u);
double class_residual(const NormalizedSeries& f, const ClassSpec& spec, const ComplexSeries& u);
// Both conditions: f against u and g = f^{-1} against v.
double bi_class_residual(const NormalizedSeries& f, const ClassSpec& spec, const ComplexSeries& u,
                         const ComplexSeries& v);

struct RelaxedPoint {
  cplx p1, p2, q2;

  cplx q1() const { return -p1; }
  // |p1|, |p2|, |q2| <= 2 (+1e-12).
  void validate() const;
};

struct ProofSolution {
  cplx a2sq;
  cplx a3;
};

// Coefficient relations of one class with the spec-dependent constants
// precomputed; solve() is cheap enough for dense scans.
class ProofRelations {
 public:
  // Throws DegenerateError when the a_2^2 denominator or a Theta vanishes.
  explicit ProofRelations(const ClassSpec& spec);

  // `c1_rotation` multiplies C1 (used when probing the phase of psi's C1).
  ProofSolution solve(const RelaxedPoint& pt, cplx c1_rotation = 1.0) const;
  // a_2 from the first-order relation alone.
  cplx a2_from_p1(cplx p1) const;
  const ClassSpec& spec() const { return spec_; }

 private:
  ClassSpec spec_;
  cplx a2sq_scale_;   // a_2^2 = a2sq_scale_ (p2 + q2)
  cplx a2_lin_;       // a_2 = a2_lin_ p1
  cplx a3_diff_;      // coefficient of (p2 - q2)
  cplx a3_c1_;        // coefficient of (p1 - q1)
  cplx a3_sq_;        // coefficient of (p1^2 + q1^2)
};

ProofSolution solve_proof_relations_B(const RelaxedPoint& pt, const ClassSpec& spec);
ProofSolution solve_proof_relations_G(const RelaxedPoint& pt, const ClassSpec& spec);
ProofSolution solve_proof_relations(const RelaxedPoint& pt, const ClassSpec& spec);

struct RelaxedScan {
  int phases = 17;
  int moduli = 9;
  int random_points = 10'000;
  std::uint64_t seed = 0;
};

struct RelaxedMax {
  double value = 0.0;
  RelaxedPoint argmax{};
  long evaluations = 0;
};

RelaxedMax relaxed_max_a2(const ClassSpec& spec, const RelaxedScan& scan = {});
RelaxedMax relaxed_max_a3(const ClassSpec& spec, const RelaxedScan& scan = {});

// One realizable construction: p from random atoms, q from the reflected atoms.
struct SampleRecord {
  std::uint64_t seed = 0;
  cplx p1, p2, q2;
  double abs_a2 = 0.0;
  double abs_a3 = 0.0;
  double bound_a2 = 0.0;
  double bound_a3 = 0.0;
  double margin_a2 = 0.0;  // bound - value; negative falsifies
  double margin_a3 = 0.0;
};

SampleRecord realizable_sample(const ProofRelations& rel, const BoundReport& bounds,
                               std::uint64_t seed, int atoms = kDefaultAtoms);

// Samples i = 0..count-1 with seed derive_seed(base_seed, i); ordered by i
// regardless of how many worker threads run (0 = hardware concurrency).
std::vector<SampleRecord> sample_realizable(const ClassSpec& spec, long count,
                                            std::uint64_t base_seed, int atoms = kDefaultAtoms,
                                            int threads = 0);

std::string sample_csv_header();
std::string to_csv_row(const SampleRecord& r);

// %.17g formatting shared by CSV and text output.
std::string format_double(double x);

}  // namespace bibaz

#endif
