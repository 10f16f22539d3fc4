#include "wcurve/curve.hpp"

namespace wcurve {

WeierstrassCurve WeierstrassCurve::make(Field f, FieldElement a1,
                                        FieldElement a2, FieldElement a3,
                                        FieldElement a4, FieldElement a6) {
  for (const auto* a : {&a1, &a2, &a3, &a4, &a6})
    if (a->field() != f)
      throw FieldMismatch("curve coefficient from another field");
  return WeierstrassCurve{f, std::move(a1), std::move(a2), std::move(a3),
                          std::move(a4), std::move(a6)};
}

WeierstrassCurve WeierstrassCurve::from_ints(Field f, long long a1,
                                             long long a2, long long a3,
                                             long long a4, long long a6) {
  return make(f, f(a1), f(a2), f(a3), f(a4), f(a6));
}

CurveInvariants invariants(const WeierstrassCurve& w) {
  const auto& a1 = w.a1;
  const auto& a2 = w.a2;
  const auto& a3 = w.a3;
  const auto& a4 = w.a4;
  const auto& a6 = w.a6;
  FieldElement b2 = a1 * a1 + 4 * a2;
  FieldElement b4 = 2 * a4 + a1 * a3;
  FieldElement b6 = a3 * a3 + 4 * a6;
  FieldElement b8 =
      a1 * a1 * a6 + 4 * (a2 * a6) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  FieldElement delta =
      -(b2 * b2 * b8) - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6);
  return CurveInvariants{b2, b4, b6, b8, delta};
}

bool is_elliptic(const WeierstrassCurve& w) {
  return !invariants(w).delta.is_zero();
}

VariableChange VariableChange::make(FieldElement u, FieldElement r,
                                    FieldElement s, FieldElement t) {
  for (const auto* a : {&r, &s, &t})
    if (a->field() != u.field())
      throw FieldMismatch("change parameters from different fields");
  if (u.is_zero()) throw DivisionByZero("u must be invertible");
  return VariableChange{std::move(u), std::move(r), std::move(s),
                        std::move(t)};
}

WeierstrassCurve variable_change(const WeierstrassCurve& w,
                                 const VariableChange& c) {
  if (c.u.field() != w.f)
    throw FieldMismatch("change parameters over another field");
  const auto& u = c.u;
  const auto& r = c.r;
  const auto& s = c.s;
  const auto& t = c.t;
  FieldElement ui = u.inv();
  FieldElement ui2 = ui * ui;
  FieldElement ui3 = ui2 * ui;
  FieldElement ui4 = ui2 * ui2;
  FieldElement ui6 = ui3 * ui3;
  FieldElement a1 = ui * (w.a1 + 2 * s);
  FieldElement a2 = ui2 * (w.a2 - s * w.a1 + 3 * r - s * s);
  FieldElement a3 = ui3 * (w.a3 + r * w.a1 + 2 * t);
  FieldElement a4 =
      ui4 * (w.a4 - s * w.a3 + 2 * (r * w.a2) - (t + r * s) * w.a1 +
             3 * (r * r) - 2 * (s * t));
  FieldElement a6 =
      ui6 * (w.a6 + r * w.a4 + r * r * w.a2 + r * r * r - t * w.a3 - t * t -
             r * t * w.a1);
  return WeierstrassCurve{w.f, a1, a2, a3, a4, a6};
}

BiPoly w_polynomial(const WeierstrassCurve& w) {
  Field f = w.f;
  // Y^2 + (a1 X + a3) Y - (X^3 + a2 X^2 + a4 X + a6)
  UniPoly cubic(f, {w.a6, w.a4, w.a2, f.one()});
  UniPoly lin(f, {w.a3, w.a1});
  return BiPoly(f, {-cubic, lin, UniPoly::from_ints(f, {1})});
}

BiPoly polynomial_x(const WeierstrassCurve& w) {
  Field f = w.f;
  UniPoly dcubic(f, {w.a4, 2 * w.a2, f(3)});
  return BiPoly(f, {-dcubic, UniPoly::constant(w.a1)});
}

BiPoly polynomial_y(const WeierstrassCurve& w) {
  Field f = w.f;
  return BiPoly(f, {UniPoly(f, {w.a3, w.a1}), UniPoly::from_ints(f, {2})});
}

BiPoly neg_polynomial(const WeierstrassCurve& w) {
  Field f = w.f;
  return BiPoly(f, {UniPoly(f, {-w.a3, -w.a1}), UniPoly::from_ints(f, {-1})});
}

bool equation(const WeierstrassCurve& w, const FieldElement& x,
              const FieldElement& y) {
  // W(x, y) = 0, evaluated without building the bivariate polynomial
  FieldElement lhs = y * (y + w.a1 * x + w.a3);
  FieldElement rhs = ((x + w.a2) * x + w.a4) * x + w.a6;
  return lhs == rhs;
}

bool nonsingular(const WeierstrassCurve& w, const FieldElement& x,
                 const FieldElement& y) {
  if (!equation(w, x, y)) return false;
  FieldElement wx = w.a1 * y - ((3 * x + 2 * w.a2) * x + w.a4);
  if (!wx.is_zero()) return true;
  FieldElement wy = 2 * y + w.a1 * x + w.a3;
  return !wy.is_zero();
}

UniPoly line_polynomial(const FieldElement& x, const FieldElement& y,
                        const FieldElement& l) {
  Field f = x.field();
  return UniPoly(f, {y - l * x, l});
}

UniPoly add_polynomial(const WeierstrassCurve& w, const FieldElement& x,
                       const FieldElement& y, const FieldElement& l) {
  return w_polynomial(w).subst_y(line_polynomial(x, y, l));
}

}  // namespace wcurve
