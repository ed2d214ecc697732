#ifndef BIBAZ_SERIES_HPP
#define BIBAZ_SERIES_HPP

// Truncated power series with complex coefficients.
//
// A series of order N knows c_0..c_N exactly; nothing is assumed about c_k
// for k > N. Binary operations therefore return the minimum order of their
// operands (hadamard excepted, which requires equal orders).

#include <complex>
#include <span>
#include <vector>

namespace bibaz {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 10;
inline constexpr double kCoefficientTol = 1e-12;

class ComplexSeries {
 public:
  // Zero series of the given order (order >= 0).
  explicit ComplexSeries(int order);
  // Coefficients c_0..c_N; order is size - 1. Throws on an empty list.
  explicit ComplexSeries(std::vector<cplx> coeffs);

  static ComplexSeries constant(cplx c, int order);
  // The series z.
  static ComplexSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }

  // Bounds-checked coefficient access.
  cplx at(int k) const;
  cplx operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  void set(int k, cplx value);

  // Drops coefficients above `order` (must not exceed the current order).
  ComplexSeries truncated(int order) const;

  // Polynomial value of the known coefficients at a point.
  cplx evaluate(cplx z) const;

 private:
  std::vector<cplx> coeffs_;
};

ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries operator-(const ComplexSeries& a);
ComplexSeries operator*(cplx s, const ComplexSeries& a);
ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b);

// Cauchy product.
ComplexSeries mul(const ComplexSeries& a, const ComplexSeries& b);

// Coefficient-wise product. Throws ValidationError on order mismatch.
ComplexSeries hadamard(const ComplexSeries& f, const ComplexSeries& h);

// Taylor coefficients of f(w(z)). Requires w_0 = 0 (ValidationError otherwise).
ComplexSeries compose(const ComplexSeries& f, const ComplexSeries& w);

// 1/a for a_0 != 0.
ComplexSeries reciprocal(const ComplexSeries& a);
ComplexSeries divide(const ComplexSeries& num, const ComplexSeries& den);

// c_k <- (k+1) c_{k+1}; order drops by one.
ComplexSeries derivative(const ComplexSeries& f);

// f(z)/z for f_0 = 0; order drops by one.
ComplexSeries divide_by_z(const ComplexSeries& f);
// z f(z); order grows by one.
ComplexSeries multiply_by_z(const ComplexSeries& f);

// Formal log(a) for a_0 = 1, via the log(1+h) expansion.
ComplexSeries log_series(const ComplexSeries& a);
// Formal exp(a) for a_0 = 0.
ComplexSeries exp_series(const ComplexSeries& a);

// max_k |a_k - b_k| over the shared order.
double max_abs_diff(const ComplexSeries& a, const ComplexSeries& b);

// Series z + a_2 z^2 + ... (class A normalization, c_0 = 0 and c_1 = 1 exactly).
class NormalizedSeries {
 public:
  // Validates the normalization; order must be >= 1.
  explicit NormalizedSeries(ComplexSeries s);
  // Builds z + tail[0] z^2 + tail[1] z^3 + ...; order = tail.size() + 1.
  static NormalizedSeries from_tail(std::span<const cplx> tail);
  static NormalizedSeries identity(int order);

  const ComplexSeries& series() const { return s_; }
  int order() const { return s_.order(); }
  cplx operator[](int k) const { return s_[k]; }

 private:
  ComplexSeries s_;
};

// Compositional inverse g with f(g(w)) = w + O(w^{N+1}).
NormalizedSeries invert(const NormalizedSeries& f);

// (f(z)/z)^t on the principal branch (f(z)/z has constant term 1), computed
// as exp(t log(f/z)) on formal series. Order N - 1.
ComplexSeries fractional_power(const NormalizedSeries& f, cplx t);

}  // namespace bibaz

#endif
