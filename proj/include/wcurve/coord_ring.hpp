#pragma once

#include <array>
#include <cstdint>

#include "wcurve/curve.hpp"

namespace wcurve {

/// Element of the coordinate ring F[X,Y] / (W), written on the basis {1, Y}
/// over F[X]: the class of p(X) + q(X) Y.
struct CoordRingElem {
  UniPoly p, q;

  static CoordRingElem make(UniPoly p, UniPoly q);
  static CoordRingElem zero(Field f) {
    return CoordRingElem{UniPoly(f), UniPoly(f)};
  }
  bool is_zero() const { return p.is_zero() && q.is_zero(); }
  bool operator==(const CoordRingElem& o) const {
    return p == o.p && q == o.q;
  }
  std::string str() const;
};

/// Canonical form of a bivariate polynomial modulo the curve relation
/// Y^2 = -(a1 X + a3) Y + (X^3 + a2 X^2 + a4 X + a6).
CoordRingElem reduce(const WeierstrassCurve& w, const BiPoly& g);

CoordRingElem cr_add(const CoordRingElem& a, const CoordRingElem& b);
CoordRingElem cr_sub(const CoordRingElem& a, const CoordRingElem& b);
/// Product in the coordinate ring.
CoordRingElem cr_mul(const WeierstrassCurve& w, const CoordRingElem& a,
                     const CoordRingElem& b);

/// Field norm of p + q Y down to F[X]:
///   p^2 - p q (a1 X + a3) - q^2 (X^3 + a2 X^2 + a4 X + a6).
UniPoly norm(const WeierstrassCurve& w, const CoordRingElem& f);

/// degree(norm(f)); equals max(2 deg p, 2 deg q + 3) and is never 1.
Degree norm_degree(const WeierstrassCurve& w, const CoordRingElem& f);

/// 2x2 matrix over F[X], row-major.
struct PolyMatrix2 {
  std::array<UniPoly, 4> e;

  static PolyMatrix2 zero(Field f) {
    return PolyMatrix2{{UniPoly(f), UniPoly(f), UniPoly(f), UniPoly(f)}};
  }
  static PolyMatrix2 identity(Field f);
  const UniPoly& at(int i, int j) const { return e[(std::size_t)(2 * i + j)]; }
  UniPoly& at(int i, int j) { return e[(std::size_t)(2 * i + j)]; }
  bool operator==(const PolyMatrix2& o) const { return e == o.e; }
};

PolyMatrix2 mat_mul(const PolyMatrix2& a, const PolyMatrix2& b);
UniPoly det(const PolyMatrix2& a);

/// Matrix of multiplication by f on the basis {1, Y}; the columns are the
/// images f*1 and f*Y. Its determinant is norm(f).
PolyMatrix2 mult_matrix(const WeierstrassCurve& w, const CoordRingElem& f);

/// Smith normal form diag(d1, d2) of a nonsingular 2x2 matrix over F[X],
/// with the unimodular transformations that realize it:
///   left * A * right = diag(d1, d2),  d1 | d2, both monic.
/// det(left) and det(right) are nonzero constants; unit is their product,
/// so d1 d2 = unit * det(A).
struct SmithForm {
  UniPoly d1, d2;
  PolyMatrix2 left, right;
  FieldElement unit;
};
SmithForm smith_normal_form(const PolyMatrix2& a);  // throws SingularMatrix

/// dim_F of F[X,Y]/(W, f) for nonzero f, computed through the Smith normal
/// form of mult_matrix(f) as deg d1 + deg d2. Throws ZeroElement on f = 0.
std::uint64_t quotient_dim(const WeierstrassCurve& w, const CoordRingElem& f);

}  // namespace wcurve
