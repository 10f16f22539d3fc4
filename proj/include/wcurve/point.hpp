#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wcurve/curve.hpp"

namespace wcurve {

/// A point of W(F): the point at infinity or a nonsingular affine point.
/// Affine points can only be built through the checked constructor.
class Point {
 public:
  static Point zero() { return Point(); }
  /// Throws SingularPoint unless (x, y) is on the curve and nonsingular.
  static Point affine(const WeierstrassCurve& w, FieldElement x,
                      FieldElement y);

  bool is_zero() const { return !aff_.has_value(); }
  const FieldElement& x() const { return aff_->x; }
  const FieldElement& y() const { return aff_->y; }

  bool operator==(const Point& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return aff_->x == o.aff_->x && aff_->y == o.aff_->y;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }

  std::string str() const;  // "O" or "x,y"

 private:
  struct Affine {
    FieldElement x, y;
  };
  Point() = default;
  std::optional<Affine> aff_;
};

/// y-coordinate of the negative of (x, y): -y - (a1 x + a3).
FieldElement neg_y(const WeierstrassCurve& w, const FieldElement& x,
                   const FieldElement& y);

/// Slope of the line used to add (x1,y1) and (x2,y2). Total on field values:
/// the vertical case returns 0 (a placeholder the caller never uses). The
/// tangent case throws DegenerateTangent if its denominator vanishes, which
/// cannot happen when both points are on the curve.
FieldElement slope(const WeierstrassCurve& w, const FieldElement& x1,
                   const FieldElement& x2, const FieldElement& y1,
                   const FieldElement& y2);

/// Coordinates of the sum along the line with slope l:
///   x3 = l^2 + a1 l - a2 - x1 - x2, y3 = neg_y(x3, l (x3 - x1) + y1).
FieldElement add_x(const WeierstrassCurve& w, const FieldElement& x1,
                   const FieldElement& x2, const FieldElement& l);
FieldElement add_y_prime(const WeierstrassCurve& w, const FieldElement& x1,
                         const FieldElement& x2, const FieldElement& y1,
                         const FieldElement& l);
FieldElement add_y(const WeierstrassCurve& w, const FieldElement& x1,
                   const FieldElement& x2, const FieldElement& y1,
                   const FieldElement& l);

Point neg(const WeierstrassCurve& w, const Point& p);
Point add(const WeierstrassCurve& w, const Point& p1, const Point& p2);
/// n-fold sum by double-and-add; negative n negates the result of |n|.
Point smul(const WeierstrassCurve& w, long long n, const Point& p);

/// All points of W(F) for finite F: Zero first, then affine points with x
/// outer and y inner in field enumeration order.
std::vector<Point> enumerate_points(const WeierstrassCurve& w);

struct GroupStructure {
  std::uint64_t order = 0;
  /// invariant factors (n1, n2) with n1 | n2 and n1 n2 = order;
  /// n1 = 1 for cyclic groups
  std::uint64_t n1 = 0, n2 = 0;
};
GroupStructure group_structure(const WeierstrassCurve& w);

/// Image of a point under the coordinate change:
///   Affine(x, y) -> Affine(u^-2 (x - r), u^-3 (y - s (x - r) - t)).
Point map_point(const WeierstrassCurve& w, const VariableChange& c,
                const Point& p);

/// Abelian-group axiom scan over every curve of a finite field (or a seeded
/// random sample of curve_limit curves when that is smaller). Checks, per
/// curve: closure of addition on nonsingular points, identity, inverses,
/// commutativity, and full triple associativity.
struct GroupLawScan {
  std::uint64_t curves = 0;
  std::uint64_t points = 0;
  std::uint64_t triples = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when all checks passed
};
GroupLawScan scan_group_law(const Field& f, std::uint64_t curve_limit = 0,
                            std::uint64_t seed = 0);

}  // namespace wcurve
