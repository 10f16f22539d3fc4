#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "wcurve/curve.hpp"

using namespace wcurve;

namespace {

WeierstrassCurve random_curve(const Field& f, std::mt19937_64& rng) {
  std::uint64_t q = f.order();
  return WeierstrassCurve::make(f, f.element(rng() % q), f.element(rng() % q),
                                f.element(rng() % q), f.element(rng() % q),
                                f.element(rng() % q));
}

}  // namespace

TEST_CASE("invariants of y^2 + y = x^3 - x over the rationals") {
  Field f = Field::parse("rational");
  WeierstrassCurve w = WeierstrassCurve::from_ints(f, 0, 0, 1, -1, 0);
  CurveInvariants iv = invariants(w);
  CHECK(iv.b2 == f(0));
  CHECK(iv.b4 == f(-2));
  CHECK(iv.b6 == f(1));
  CHECK(iv.b8 == f(-1));
  CHECK(iv.delta == f(37));
  CHECK(is_elliptic(w));
}

TEST_CASE("invariant spot values") {
  Field fq = Field::parse("rational");
  CHECK(invariants(WeierstrassCurve::from_ints(fq, 0, 0, 0, -1, 0)).delta ==
        fq(64));
  // cuspidal cubic y^2 = x^3
  WeierstrassCurve cusp = WeierstrassCurve::from_ints(fq, 0, 0, 0, 0, 0);
  CHECK(invariants(cusp).delta == fq(0));
  CHECK(!is_elliptic(cusp));

  Field f5 = Field::parse("q(5)");
  CHECK(invariants(WeierstrassCurve::from_ints(f5, 0, 0, 0, 1, 1)).delta ==
        f5(4));

  Field f2 = Field::parse("q(2)");
  CHECK(invariants(WeierstrassCurve::from_ints(f2, 0, 0, 1, 1, 1)).delta ==
        f2(1));
}

TEST_CASE("4 b8 = b2 b6 - b4^2 on random curves") {
  std::mt19937_64 rng(3);
  for (const char* spec : {"q(101)", "q(2^4)", "q(3^2)", "rational"}) {
    Field f = Field::parse(spec);
    CAPTURE(spec);
    for (int trial = 0; trial < 64; ++trial) {
      WeierstrassCurve w =
          f.is_finite()
              ? random_curve(f, rng)
              : WeierstrassCurve::from_ints(f, (long long)(rng() % 19) - 9,
                                            (long long)(rng() % 19) - 9,
                                            (long long)(rng() % 19) - 9,
                                            (long long)(rng() % 19) - 9,
                                            (long long)(rng() % 19) - 9);
      CurveInvariants iv = invariants(w);
      CHECK(4 * iv.b8 == iv.b2 * iv.b6 - iv.b4 * iv.b4);
    }
  }
}

TEST_CASE("curve coefficients must share one field") {
  Field f5 = Field::parse("q(5)");
  Field f7 = Field::parse("q(7)");
  CHECK_THROWS_AS(WeierstrassCurve::make(f5, f5(0), f5(0), f7(1), f5(1), f5(1)),
                  FieldMismatch);
}

TEST_CASE("variable change with unit u keeps the discriminant") {
  Field f = Field::parse("rational");
  WeierstrassCurve w = WeierstrassCurve::from_ints(f, 0, 0, 1, -1, 0);
  VariableChange c = VariableChange::make(f(1), f(1), f(0), f(0));
  WeierstrassCurve w2 = variable_change(w, c);
  CHECK(w2.a1 == f(0));
  CHECK(w2.a2 == f(3));
  CHECK(w2.a3 == f(1));
  CHECK(w2.a4 == f(2));
  CHECK(w2.a6 == f(0));
  CHECK(invariants(w2).delta == f(37));
}

TEST_CASE("discriminant transforms by u^-12") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"q(101)", "q(2^3)", "q(3^2)"}) {
    Field f = Field::parse(spec);
    std::uint64_t q = f.order();
    CAPTURE(spec);
    for (int trial = 0; trial < 100; ++trial) {
      WeierstrassCurve w = random_curve(f, rng);
      VariableChange c = VariableChange::make(
          f.element(1 + rng() % (q - 1)), f.element(rng() % q),
          f.element(rng() % q), f.element(rng() % q));
      CHECK(invariants(variable_change(w, c)).delta ==
            pow(c.u, -12) * invariants(w).delta);
    }
  }
}

TEST_CASE("variable changes compose and invert") {
  Field f = Field::parse("q(101)");
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    WeierstrassCurve w = random_curve(f, rng);
    FieldElement u = f.element(1 + rng() % 100);
    FieldElement r = f.element(rng() % 101);
    FieldElement s = f.element(rng() % 101);
    FieldElement t = f.element(rng() % 101);
    VariableChange c = VariableChange::make(u, r, s, t);
    // the inverse substitution undoes c
    VariableChange inv_c = VariableChange::make(
        u.inv(), -(u.inv() * u.inv() * r), -(u.inv() * s),
        u.inv() * u.inv() * u.inv() * (r * s - t));
    CHECK(variable_change(variable_change(w, c), inv_c) == w);
  }
}

TEST_CASE("u must be invertible") {
  Field f = Field::parse("q(5)");
  CHECK_THROWS_AS(VariableChange::make(f(0), f(0), f(0), f(0)),
                  DivisionByZero);
}

TEST_CASE("scalar equation and nonsingularity match the polynomial route") {
  // the fast paths must agree with W, dW/dX, dW/dY as actual polynomials
  for (const char* spec : {"q(2)", "q(3)", "q(2^2)", "q(5)"}) {
    Field f = Field::parse(spec);
    std::uint64_t q = f.order();
    CAPTURE(spec);
    std::uint64_t total = q * q * q * q * q;
    for (std::uint64_t index = 0; index < total; ++index) {
      std::uint64_t rest = index;
      FieldElement a[5] = {f.zero(), f.zero(), f.zero(), f.zero(), f.zero()};
      for (auto& ai : a) {
        ai = f.element(rest % q);
        rest /= q;
      }
      WeierstrassCurve w{f, a[0], a[1], a[2], a[3], a[4]};
      BiPoly wp = w_polynomial(w);
      BiPoly wx = polynomial_x(w);
      BiPoly wy = polynomial_y(w);
      BiPoly ng = neg_polynomial(w);
      for (std::uint64_t i = 0; i < q; ++i)
        for (std::uint64_t j = 0; j < q; ++j) {
          FieldElement x = f.element(i), y = f.element(j);
          bool on = wp.eval2(x, y).is_zero();
          REQUIRE(equation(w, x, y) == on);
          bool smooth =
              on && (!wx.eval2(x, y).is_zero() || !wy.eval2(x, y).is_zero());
          REQUIRE(nonsingular(w, x, y) == smooth);
          REQUIRE(ng.eval2(x, y) == (-y - (w.a1 * x + w.a3)));
        }
    }
  }
}

TEST_CASE("derivative polynomials are the formal derivatives of W") {
  std::mt19937_64 rng(13);
  for (const char* spec : {"q(101)", "q(2^4)", "q(3^2)"}) {
    Field f = Field::parse(spec);
    for (int trial = 0; trial < 20; ++trial) {
      WeierstrassCurve w = random_curve(f, rng);
      CHECK(w_polynomial(w).derivative_x() == polynomial_x(w));
      CHECK(w_polynomial(w).derivative_y() == polynomial_y(w));
    }
  }
}

TEST_CASE("add_polynomial is W restricted to a line") {
  Field f = Field::parse("q(5)");
  WeierstrassCurve w = WeierstrassCurve::from_ints(f, 0, 0, 0, 1, 1);
  FieldElement x1 = f(0), y1 = f(1), l = f(3);
  UniPoly lam = line_polynomial(x1, y1, l);
  CHECK(lam.eval(x1) == y1);
  CHECK(lam == UniPoly(f, {y1, l}));
  UniPoly ap = add_polynomial(w, x1, y1, l);
  for (int xi = 0; xi < 5; ++xi) {
    FieldElement x = f(xi);
    CHECK(ap.eval(x) == w_polynomial(w).eval2(x, lam.eval(x)));
  }
  // tangent line at (0,1) with slope 3: meets the curve again at x = 4
  CHECK(ap.eval(f(0)).is_zero());
  CHECK(ap.eval(f(4)).is_zero());
}
