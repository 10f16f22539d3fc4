#include "wcurve/coord_ring.hpp"

namespace wcurve {

namespace {

UniPoly cubic_part(const WeierstrassCurve& w) {
  return UniPoly(w.f, {w.a6, w.a4, w.a2, w.f.one()});
}

UniPoly linear_part(const WeierstrassCurve& w) {
  return UniPoly(w.f, {w.a3, w.a1});
}

}  // namespace

CoordRingElem CoordRingElem::make(UniPoly p, UniPoly q) {
  if (p.field() != q.field())
    throw FieldMismatch("components over different fields");
  return CoordRingElem{std::move(p), std::move(q)};
}

std::string CoordRingElem::str() const {
  return "(" + p.str() + ") + (" + q.str() + ")*Y";
}

CoordRingElem reduce(const WeierstrassCurve& w, const BiPoly& g) {
  auto [quot, rem] = BiPoly::divmod_monic(g, w_polynomial(w));
  (void)quot;
  return CoordRingElem{rem.coeff_y(0), rem.coeff_y(1)};
}

CoordRingElem cr_add(const CoordRingElem& a, const CoordRingElem& b) {
  return CoordRingElem{a.p + b.p, a.q + b.q};
}

CoordRingElem cr_sub(const CoordRingElem& a, const CoordRingElem& b) {
  return CoordRingElem{a.p - b.p, a.q - b.q};
}

CoordRingElem cr_mul(const WeierstrassCurve& w, const CoordRingElem& a,
                     const CoordRingElem& b) {
  // (p1 + q1 Y)(p2 + q2 Y) with Y^2 = c(X) - l(X) Y
  UniPoly c = cubic_part(w);
  UniPoly l = linear_part(w);
  UniPoly qq = a.q * b.q;
  UniPoly p = a.p * b.p + qq * c;
  UniPoly q = a.p * b.q + a.q * b.p - qq * l;
  return CoordRingElem{p, q};
}

UniPoly norm(const WeierstrassCurve& w, const CoordRingElem& f) {
  return f.p * f.p - f.p * f.q * linear_part(w) - f.q * f.q * cubic_part(w);
}

Degree norm_degree(const WeierstrassCurve& w, const CoordRingElem& f) {
  return norm(w, f).degree();
}

PolyMatrix2 PolyMatrix2::identity(Field f) {
  PolyMatrix2 m = zero(f);
  m.at(0, 0) = UniPoly::from_ints(f, {1});
  m.at(1, 1) = UniPoly::from_ints(f, {1});
  return m;
}

PolyMatrix2 mat_mul(const PolyMatrix2& a, const PolyMatrix2& b) {
  PolyMatrix2 r = PolyMatrix2::zero(a.at(0, 0).field());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return r;
}

UniPoly det(const PolyMatrix2& a) {
  return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
}

PolyMatrix2 mult_matrix(const WeierstrassCurve& w, const CoordRingElem& f) {
  // f*1 = p + q Y, f*Y = q c(X) + (p - q l(X)) Y
  PolyMatrix2 m = PolyMatrix2::zero(w.f);
  m.at(0, 0) = f.p;
  m.at(1, 0) = f.q;
  m.at(0, 1) = f.q * cubic_part(w);
  m.at(1, 1) = f.p - f.q * linear_part(w);
  return m;
}

namespace {

struct SnfState {
  PolyMatrix2 a, left, right;

  void swap_rows() {
    std::swap(a.at(0, 0), a.at(1, 0));
    std::swap(a.at(0, 1), a.at(1, 1));
    std::swap(left.at(0, 0), left.at(1, 0));
    std::swap(left.at(0, 1), left.at(1, 1));
  }
  void swap_cols() {
    std::swap(a.at(0, 0), a.at(0, 1));
    std::swap(a.at(1, 0), a.at(1, 1));
    std::swap(right.at(0, 0), right.at(0, 1));
    std::swap(right.at(1, 0), right.at(1, 1));
  }
  void scale_row(int i, const FieldElement& c) {
    for (int j = 0; j < 2; ++j) {
      a.at(i, j) = a.at(i, j).scaled(c);
      left.at(i, j) = left.at(i, j).scaled(c);
    }
  }
  // row i -= q * row k (and mirror on left)
  void row_op(int i, int k, const UniPoly& q) {
    for (int j = 0; j < 2; ++j) {
      a.at(i, j) = a.at(i, j) - q * a.at(k, j);
      left.at(i, j) = left.at(i, j) - q * left.at(k, j);
    }
  }
  // col j -= q * col k (and mirror on right)
  void col_op(int j, int k, const UniPoly& q) {
    for (int i = 0; i < 2; ++i) {
      a.at(i, j) = a.at(i, j) - q * a.at(i, k);
      right.at(i, j) = right.at(i, j) - q * right.at(i, k);
    }
  }
  // row i += row k
  void row_add(int i, int k) {
    for (int j = 0; j < 2; ++j) {
      a.at(i, j) = a.at(i, j) + a.at(k, j);
      left.at(i, j) = left.at(i, j) + left.at(k, j);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix2& input) {
  Field f = input.at(0, 0).field();
  if (det(input).is_zero())
    throw SingularMatrix("matrix has zero determinant");

  SnfState st{input, PolyMatrix2::identity(f), PolyMatrix2::identity(f)};

  for (;;) {
    // pivot: nonzero entry of minimal degree, ties resolved row-major
    int pi = -1, pj = -1;
    Degree best = Degree::neg_infinity();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const UniPoly& e = st.a.at(i, j);
        if (e.is_zero()) continue;
        if (pi < 0 || e.degree() < best) {
          best = e.degree();
          pi = i;
          pj = j;
        }
      }
    if (pi == 1) st.swap_rows();
    if (pj == 1) st.swap_cols();
    st.scale_row(0, st.a.at(0, 0).leading().inv());

    bool reduced = true;
    if (!st.a.at(1, 0).is_zero()) {
      auto [q, r] = UniPoly::divmod_monic(st.a.at(1, 0), st.a.at(0, 0));
      st.row_op(1, 0, q);
      if (!r.is_zero()) reduced = false;
    }
    if (reduced && !st.a.at(0, 1).is_zero()) {
      auto [q, r] = UniPoly::divmod_monic(st.a.at(0, 1), st.a.at(0, 0));
      st.col_op(1, 0, q);
      if (!r.is_zero()) reduced = false;
    }
    if (!reduced) continue;

    // both off-diagonal entries are zero; enforce d1 | d2
    auto [q, r] = UniPoly::divmod_monic(st.a.at(1, 1), st.a.at(0, 0));
    (void)q;
    if (r.is_zero()) break;
    st.row_add(0, 1);  // brings a11 next to the pivot, degree then drops
  }
  st.scale_row(1, st.a.at(1, 1).leading().inv());

  SmithForm out{st.a.at(0, 0), st.a.at(1, 1), st.left, st.right,
                (det(st.left) * det(st.right)).coeff(0)};
  return out;
}

std::uint64_t quotient_dim(const WeierstrassCurve& w, const CoordRingElem& f) {
  if (f.is_zero()) throw ZeroElement("quotient by the zero ideal is infinite");
  if (f.p.field() != w.f)
    throw FieldMismatch("ring element over another field");
  SmithForm s = smith_normal_form(mult_matrix(w, f));
  return (std::uint64_t)s.d1.degree().value() +
         (std::uint64_t)s.d2.degree().value();
}

}  // namespace wcurve
