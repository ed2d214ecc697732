#include <doctest.h>

#include "bibaz/error.hpp"
#include "bibaz/series.hpp"
#include "test_util.hpp"

using namespace bibaz;
using bibaz::test::random_normalized;
using bibaz::test::random_series;

namespace {

ComplexSeries S(std::vector<cplx> c) { return ComplexSeries(std::move(c)); }

}  // namespace

TEST_CASE("construction and access") {
  ComplexSeries z(4);
  CHECK(z.order() == 4);
  CHECK(z.coeffs().size() == 5);
  CHECK_THROWS(ComplexSeries(std::vector<cplx>{}));
  CHECK_THROWS(ComplexSeries(-1));
  CHECK_THROWS_AS(z.at(5), std::out_of_range);
  CHECK(ComplexSeries::identity(3)[1] == cplx(1.0));
  CHECK(ComplexSeries::constant(2.5, 3)[0] == cplx(2.5));
  CHECK(S({1, 2, 3}).evaluate(2.0) == cplx(17.0));
  CHECK(S({1, 2, 3}).truncated(1).order() == 1);
}

TEST_CASE("mul") {
  const ComplexSeries r = mul(S({1, 1, 0}), S({1, -1, 0}));
  CHECK(r[0] == cplx(1));
  CHECK(r[1] == cplx(0));
  CHECK(r[2] == cplx(-1));

  const ComplexSeries a = S({2, cplx(0, 1), 3, -1});
  CHECK(max_abs_diff(mul(a, ComplexSeries::constant(1.0, 3)), a) == 0.0);

  const ComplexSeries sq = mul(S({0, 1, 1, 0, 0}), S({0, 1, 1, 0, 0}));
  const ComplexSeries want = S({0, 0, 1, 2, 1});
  CHECK(max_abs_diff(sq, want) == 0.0);
}

TEST_CASE("binary operations take the minimum order") {
  const ComplexSeries a = S({1, 2, 3, 4, 5});
  const ComplexSeries b = S({1, 1, 1});
  CHECK((a + b).order() == 2);
  CHECK((a - b).order() == 2);
  CHECK(mul(a, b).order() == 2);
  CHECK(compose(a, S({0, 1, 0})).order() == 2);
}

TEST_CASE("hadamard") {
  const ComplexSeries r = hadamard(S({0, 1, 2}), S({0, 1, 3}));
  CHECK(max_abs_diff(r, S({0, 1, 6})) == 0.0);

  Rng rng(11);
  const ComplexSeries f = random_series(rng, 6);
  const ComplexSeries h = random_series(rng, 6);
  CHECK(max_abs_diff(hadamard(f, S(std::vector<cplx>(7, 1.0))), f) == 0.0);
  CHECK(max_abs_diff(hadamard(f, h), hadamard(h, f)) == 0.0);
  CHECK_THROWS_AS(hadamard(f, random_series(rng, 5)), ValidationError);
}

TEST_CASE("compose") {
  Rng rng(12);
  const ComplexSeries f = random_series(rng, 6);
  CHECK(max_abs_diff(compose(f, ComplexSeries::identity(6)), f) < 1e-15);
  CHECK(max_abs_diff(compose(S({1, 1, 0, 0}), S({0, 0, 1, 0})), S({1, 0, 1, 0})) == 0.0);
  CHECK_THROWS_AS(compose(f, S({0.1, 1, 0})), ValidationError);

  // phi = 1 + 2z + 2z^2 of the Schwarz function of p = (1+z)/(1-z)-like p with
  // generic p1, p2: phi(u) = 1 + p1 z + (p2 - p1^2/2 + p1^2/2) z^2 = 1 + p1 z + p2 z^2
  // when B1 = B2 = 2, since then phi(u) = (1+u)/(1-u) + O(u^3) = p + O(z^3).
  const cplx p1(0.7, -0.4), p2(-1.1, 0.3);
  const ComplexSeries p = S({1, p1, p2});
  const ComplexSeries u = divide(p - ComplexSeries::constant(1.0, 2), p + ComplexSeries::constant(1.0, 2));
  const ComplexSeries phi_u = compose(S({1, 2, 2}), u);
  CHECK(std::abs(phi_u[1] - p1) < 1e-15);
  CHECK(std::abs(phi_u[2] - p2) < 1e-15);
}

TEST_CASE("reciprocal, divide, log and exp") {
  Rng rng(13);
  ComplexSeries a = random_series(rng, 8);
  a.set(0, 1.0);
  CHECK(max_abs_diff(mul(a, reciprocal(a)), ComplexSeries::constant(1.0, 8)) < 1e-12);
  CHECK_THROWS(reciprocal(S({0, 1})));
  CHECK(max_abs_diff(exp_series(log_series(a)), a) < 1e-12);
  // log(1/(1-z)) = z + z^2/2 + z^3/3
  const ComplexSeries l = log_series(reciprocal(S({1, -1, 0, 0})));
  CHECK(std::abs(l[3] - 1.0 / 3.0) < 1e-15);
  CHECK_THROWS(log_series(S({2, 1})));
  CHECK_THROWS(exp_series(S({1, 1})));
}

TEST_CASE("derivative and z shifts") {
  CHECK(max_abs_diff(derivative(ComplexSeries::identity(3)), S({1, 0, 0})) == 0.0);
  const cplx a2(0.3, 1), a3(-2, 0.5);
  CHECK(max_abs_diff(derivative(S({0, 1, a2, a3})), S({1, 2.0 * a2, 3.0 * a3})) == 0.0);

  Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    const ComplexSeries f = random_series(rng, 7);
    const ComplexSeries g = random_series(rng, 7);
    const ComplexSeries lhs = derivative(mul(f, g));
    const ComplexSeries rhs = mul(derivative(f), g) + mul(f, derivative(g));
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
  CHECK(max_abs_diff(divide_by_z(S({0, 1, 2})), S({1, 2})) == 0.0);
  CHECK_THROWS(divide_by_z(S({1, 1})));
  CHECK(max_abs_diff(multiply_by_z(S({1, 2})), S({0, 1, 2})) == 0.0);
}

TEST_CASE("normalized series") {
  CHECK_THROWS_AS(NormalizedSeries(S({0, 1.0 + 1e-15, 2})), ValidationError);
  CHECK_THROWS_AS(NormalizedSeries(S({1e-300, 1, 2})), ValidationError);
  CHECK_THROWS_AS(NormalizedSeries(S({0})), ValidationError);
  const std::vector<cplx> tail{2.0, 3.0};
  const NormalizedSeries f = NormalizedSeries::from_tail(tail);
  CHECK(f.order() == 3);
  CHECK(f[3] == cplx(3));
}

TEST_CASE("invert: closed forms and examples") {
  const NormalizedSeries geo(S({0, 1, 1, 1, 1}));
  CHECK(max_abs_diff(invert(geo).series(), S({0, 1, -1, 1, -1})) < 1e-15);
  CHECK(max_abs_diff(invert(NormalizedSeries::identity(5)).series(), ComplexSeries::identity(5)) == 0.0);

  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const NormalizedSeries f = random_normalized(rng, 10);
    const NormalizedSeries g = invert(f);
    const cplx a2 = f[2], a3 = f[3], a4 = f[4];
    CHECK(std::abs(g[2] + a2) < 1e-12);
    CHECK(std::abs(g[3] - (2.0 * a2 * a2 - a3)) < 1e-12);
    CHECK(std::abs(g[4] + (5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4)) < 1e-12);
  }
}

TEST_CASE("invert: involution and composition identity") {
  Rng rng(16);
  for (int i = 0; i < 100; ++i) {
    const NormalizedSeries f = random_normalized(rng, 10, 0.5);
    const NormalizedSeries g = invert(f);
    CHECK(max_abs_diff(invert(g).series(), f.series()) < 1e-9);
    CHECK(max_abs_diff(compose(f.series(), g.series()), ComplexSeries::identity(10)) < 1e-10);
    CHECK(max_abs_diff(compose(g.series(), f.series()), ComplexSeries::identity(10)) < 1e-10);
  }
}

TEST_CASE("fractional_power") {
  Rng rng(17);
  const NormalizedSeries f = random_normalized(rng, 8, 0.5);
  CHECK(max_abs_diff(fractional_power(f, 0.0), ComplexSeries::constant(1.0, 7)) < 1e-15);
  CHECK(max_abs_diff(fractional_power(f, 1.0), divide_by_z(f.series())) < 1e-12);
  const NormalizedSeries zz(S({0, 1, 1, 0, 0}));
  CHECK(max_abs_diff(fractional_power(zz, 2.0), S({1, 2, 1, 0})) < 1e-14);
  // (1 + z)^{1/2} = 1 + z/2 - z^2/8 + z^3/16
  CHECK(max_abs_diff(fractional_power(zz, 0.5), S({1, 0.5, -0.125, 0.0625})) < 1e-15);

  for (int i = 0; i < 50; ++i) {
    const NormalizedSeries h = random_normalized(rng, 8, 0.5);
    const cplx s = test::random_cplx(rng, 2.0), t = test::random_cplx(rng, 2.0);
    const ComplexSeries lhs = fractional_power(h, s + t);
    const ComplexSeries rhs = mul(fractional_power(h, s), fractional_power(h, t));
    CHECK(max_abs_diff(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("algebraic properties") {
  Rng rng(18);
  for (int i = 0; i < 50; ++i) {
    const ComplexSeries a = random_series(rng, 8);
    const ComplexSeries b = random_series(rng, 8);
    const ComplexSeries c = random_series(rng, 8);
    CHECK(max_abs_diff(mul(a, b), mul(b, a)) < 1e-14);
    CHECK(max_abs_diff(mul(mul(a, b), c), mul(a, mul(b, c))) < 1e-12);

    ComplexSeries w = random_series(rng, 8, 0.5);
    w.set(0, 0.0);
    const ComplexSeries lhs = derivative(compose(a, w));
    const ComplexSeries rhs = mul(compose(derivative(a), w.truncated(7)), derivative(w));
    CHECK(lhs.order() == 7);
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}
