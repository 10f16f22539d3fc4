#pragma once

#include "wcurve/poly.hpp"

namespace wcurve {

/// Long Weierstrass equation
///   Y^2 + a1 X Y + a3 Y = X^3 + a2 X^2 + a4 X + a6
/// over any exact field, including characteristic 2 and 3.
struct WeierstrassCurve {
  Field f;
  FieldElement a1, a2, a3, a4, a6;

  static WeierstrassCurve make(Field f, FieldElement a1, FieldElement a2,
                               FieldElement a3, FieldElement a4,
                               FieldElement a6);
  static WeierstrassCurve from_ints(Field f, long long a1, long long a2,
                                    long long a3, long long a4, long long a6);

  bool operator==(const WeierstrassCurve& o) const {
    return f == o.f && a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 &&
           a6 == o.a6;
  }
};

struct CurveInvariants {
  FieldElement b2, b4, b6, b8, delta;
};

/// b2 = a1^2 + 4 a2            b4 = 2 a4 + a1 a3
/// b6 = a3^2 + 4 a6            b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
/// delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
CurveInvariants invariants(const WeierstrassCurve& w);

/// Nonzero discriminant.
bool is_elliptic(const WeierstrassCurve& w);

/// Admissible change of coordinates (X, Y) -> (u^2 X + r, u^3 Y + u^2 s X + t)
/// with u invertible.
struct VariableChange {
  FieldElement u, r, s, t;
  static VariableChange make(FieldElement u, FieldElement r, FieldElement s,
                             FieldElement t);  // throws DivisionByZero if u=0
};

/// The transformed curve; its discriminant is u^-12 times the original.
WeierstrassCurve variable_change(const WeierstrassCurve& w,
                                 const VariableChange& c);

/// W(X,Y) = Y^2 + (a1 X + a3) Y - (X^3 + a2 X^2 + a4 X + a6)
BiPoly w_polynomial(const WeierstrassCurve& w);
/// dW/dX = a1 Y - (3 X^2 + 2 a2 X + a4)
BiPoly polynomial_x(const WeierstrassCurve& w);
/// dW/dY = 2 Y + a1 X + a3
BiPoly polynomial_y(const WeierstrassCurve& w);
/// -Y - (a1 X + a3), the Y-coordinate of point negation
BiPoly neg_polynomial(const WeierstrassCurve& w);

/// True iff (x, y) satisfies the curve equation, i.e. W(x, y) = 0.
bool equation(const WeierstrassCurve& w, const FieldElement& x,
              const FieldElement& y);
/// True iff (x, y) is on the curve and not a singular point of it.
bool nonsingular(const WeierstrassCurve& w, const FieldElement& x,
                 const FieldElement& y);

/// The line through (x, y) with slope l: lambda(X) = l (X - x) + y.
UniPoly line_polynomial(const FieldElement& x, const FieldElement& y,
                        const FieldElement& l);
/// W(X, lambda(X)) for the line through (x, y) with slope l.
UniPoly add_polynomial(const WeierstrassCurve& w, const FieldElement& x,
                       const FieldElement& y, const FieldElement& l);

}  // namespace wcurve
