#include "bibaz/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bibaz/error.hpp"

namespace bibaz {

ComplexSeries::ComplexSeries(int order) {
  if (order < 0) throw ValidationError("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, cplx{});
}

ComplexSeries::ComplexSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ValidationError("series needs at least one coefficient");
}

ComplexSeries ComplexSeries::constant(cplx c, int order) {
  ComplexSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

ComplexSeries ComplexSeries::identity(int order) {
  if (order < 1) throw ValidationError("identity series needs order >= 1");
  ComplexSeries s(order);
  s.coeffs_[1] = 1.0;
  return s;
}

cplx ComplexSeries::at(int k) const {
  if (k < 0 || k > order())
    throw std::out_of_range("coefficient " + std::to_string(k) + " beyond order " +
                            std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(k)];
}

void ComplexSeries::set(int k, cplx value) {
  if (k < 0 || k > order())
    throw std::out_of_range("coefficient " + std::to_string(k) + " beyond order " +
                            std::to_string(order()));
  coeffs_[static_cast<std::size_t>(k)] = value;
}

ComplexSeries ComplexSeries::truncated(int order) const {
  if (order < 0 || order > this->order())
    throw ValidationError("cannot truncate to order " + std::to_string(order));
  return ComplexSeries(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

cplx ComplexSeries::evaluate(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

namespace {

int shared_order(const ComplexSeries& a, const ComplexSeries& b) {
  return std::min(a.order(), b.order());
}

// Cauchy product truncated at `order`.
ComplexSeries product_to(const ComplexSeries& a, const ComplexSeries& b, int order) {
  ComplexSeries out(order);
  for (int k = 0; k <= order; ++k) {
    cplx acc{};
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    out.set(k, acc);
  }
  return out;
}

}  // namespace

ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries out(shared_order(a, b));
  for (int k = 0; k <= out.order(); ++k) out.set(k, a[k] + b[k]);
  return out;
}

ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries out(shared_order(a, b));
  for (int k = 0; k <= out.order(); ++k) out.set(k, a[k] - b[k]);
  return out;
}

ComplexSeries operator-(const ComplexSeries& a) {
  ComplexSeries out(a.order());
  for (int k = 0; k <= out.order(); ++k) out.set(k, -a[k]);
  return out;
}

ComplexSeries operator*(cplx s, const ComplexSeries& a) {
  ComplexSeries out(a.order());
  for (int k = 0; k <= out.order(); ++k) out.set(k, s * a[k]);
  return out;
}

ComplexSeries operator*(const ComplexSeries& a, const ComplexSeries& b) { return mul(a, b); }

ComplexSeries mul(const ComplexSeries& a, const ComplexSeries& b) {
  return product_to(a, b, shared_order(a, b));
}

ComplexSeries hadamard(const ComplexSeries& f, const ComplexSeries& h) {
  if (f.order() != h.order())
    throw ValidationError("hadamard product needs equal orders (" + std::to_string(f.order()) +
                          " vs " + std::to_string(h.order()) + ")");
  ComplexSeries out(f.order());
  for (int k = 0; k <= out.order(); ++k) out.set(k, f[k] * h[k]);
  return out;
}

ComplexSeries compose(const ComplexSeries& f, const ComplexSeries& w) {
  if (std::abs(w[0]) != 0.0) throw ValidationError("compose needs an inner series with w_0 = 0");
  const int order = shared_order(f, w);
  // Horner in w; f_k for k > order cannot reach z^order.
  ComplexSeries acc = ComplexSeries::constant(f[order], order);
  for (int k = order - 1; k >= 0; --k) {
    acc = product_to(acc, w, order);
    acc.set(0, acc[0] + f[k]);
  }
  return acc;
}

ComplexSeries reciprocal(const ComplexSeries& a) {
  if (std::abs(a[0]) == 0.0) throw DegenerateError("reciprocal of a series with zero constant term");
  ComplexSeries out(a.order());
  out.set(0, 1.0 / a[0]);
  for (int k = 1; k <= a.order(); ++k) {
    cplx acc{};
    for (int j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out.set(k, -acc / a[0]);
  }
  return out;
}

ComplexSeries divide(const ComplexSeries& num, const ComplexSeries& den) {
  return mul(num, reciprocal(den));
}

ComplexSeries derivative(const ComplexSeries& f) {
  if (f.order() == 0) throw ValidationError("derivative of an order-0 series is undefined");
  ComplexSeries out(f.order() - 1);
  for (int k = 0; k <= out.order(); ++k) out.set(k, static_cast<double>(k + 1) * f[k + 1]);
  return out;
}

ComplexSeries divide_by_z(const ComplexSeries& f) {
  if (std::abs(f[0]) != 0.0) throw ValidationError("divide_by_z needs f_0 = 0");
  if (f.order() == 0) throw ValidationError("divide_by_z of an order-0 series is undefined");
  ComplexSeries out(f.order() - 1);
  for (int k = 0; k <= out.order(); ++k) out.set(k, f[k + 1]);
  return out;
}

ComplexSeries multiply_by_z(const ComplexSeries& f) {
  ComplexSeries out(f.order() + 1);
  for (int k = 0; k <= f.order(); ++k) out.set(k + 1, f[k]);
  return out;
}

ComplexSeries log_series(const ComplexSeries& a) {
  if (std::abs(a[0] - 1.0) > kCoefficientTol)
    throw ValidationError("log_series needs constant term 1");
  const int order = a.order();
  ComplexSeries h = a;
  h.set(0, 0.0);
  if (order == 0) return ComplexSeries(0);
  ComplexSeries log1p(order);
  for (int k = 1; k <= order; ++k) log1p.set(k, (k % 2 == 1 ? 1.0 : -1.0) / k);
  return compose(log1p, h);
}

ComplexSeries exp_series(const ComplexSeries& a) {
  if (std::abs(a[0]) > kCoefficientTol) throw ValidationError("exp_series needs constant term 0");
  const int order = a.order();
  ComplexSeries h = a;
  h.set(0, 0.0);
  ComplexSeries e(order);
  double fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    e.set(k, 1.0 / fact);
  }
  if (order == 0) return e;
  return compose(e, h);
}

double max_abs_diff(const ComplexSeries& a, const ComplexSeries& b) {
  double worst = 0.0;
  for (int k = 0; k <= shared_order(a, b); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

NormalizedSeries::NormalizedSeries(ComplexSeries s) : s_(std::move(s)) {
  if (s_.order() < 1) throw ValidationError("normalized series needs order >= 1");
  if (s_[0] != cplx{0.0, 0.0} || s_[1] != cplx{1.0, 0.0})
    throw ValidationError("normalized series needs c_0 = 0 and c_1 = 1");
}

NormalizedSeries NormalizedSeries::from_tail(std::span<const cplx> tail) {
  std::vector<cplx> c{0.0, 1.0};
  c.insert(c.end(), tail.begin(), tail.end());
  return NormalizedSeries(ComplexSeries(std::move(c)));
}

NormalizedSeries NormalizedSeries::identity(int order) {
  return NormalizedSeries(ComplexSeries::identity(order));
}

NormalizedSeries invert(const NormalizedSeries& f) {
  const int order = f.order();
  ComplexSeries g = ComplexSeries::identity(order);
  // [f(g)]_n = g_n + (terms in g_2..g_{n-1}) because f_1 = 1.
  for (int n = 2; n <= order; ++n) g.set(n, -compose(f.series(), g)[n]);
  return NormalizedSeries(std::move(g));
}

ComplexSeries fractional_power(const NormalizedSeries& f, cplx t) {
  const ComplexSeries quotient = divide_by_z(f.series());
  return exp_series(t * log_series(quotient));
}

}  // namespace bibaz
