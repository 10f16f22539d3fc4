#pragma once

#include <climits>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "wcurve/field.hpp"

namespace wcurve {

/// Polynomial degree extended with -infinity for the zero polynomial.
/// -infinity is absorbing for + and for scaling by c >= 1, and is the
/// minimum of the order.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(kNegInf, 0); }
  Degree(int n) : v_(n) {}

  bool is_neg_infinity() const { return v_ == kNegInf; }
  int value() const {
    if (is_neg_infinity()) throw Error("degree of the zero polynomial");
    return v_;
  }

  Degree operator+(Degree o) const {
    if (is_neg_infinity() || o.is_neg_infinity()) return neg_infinity();
    return Degree(v_ + o.v_);
  }
  Degree operator+(int n) const { return *this + Degree(n); }
  Degree times(int c) const {  // c >= 1
    if (is_neg_infinity()) return neg_infinity();
    return Degree(v_ * c);
  }

  friend bool operator==(Degree a, Degree b) { return a.v_ == b.v_; }
  friend bool operator!=(Degree a, Degree b) { return a.v_ != b.v_; }
  friend bool operator<(Degree a, Degree b) {
    if (a.is_neg_infinity()) return !b.is_neg_infinity();
    if (b.is_neg_infinity()) return false;
    return a.v_ < b.v_;
  }
  friend bool operator<=(Degree a, Degree b) { return a < b || a == b; }
  friend bool operator>(Degree a, Degree b) { return b < a; }
  friend bool operator>=(Degree a, Degree b) { return b <= a; }

  friend Degree max(Degree a, Degree b) { return a < b ? b : a; }

  std::string str() const {
    return is_neg_infinity() ? "-inf" : std::to_string(v_);
  }

 private:
  static constexpr int kNegInf = INT_MIN;
  Degree(int v, int) : v_(v) {}
  int v_;
};

/// Dense univariate polynomial over a field, kept normalized (no trailing
/// zero coefficients; the zero polynomial has an empty coefficient list).
class UniPoly {
 public:
  explicit UniPoly(Field f) : f_(f) {}
  UniPoly(Field f, std::vector<FieldElement> coeffs);

  static UniPoly constant(const FieldElement& c);
  static UniPoly x(Field f);
  static UniPoly from_ints(Field f, std::initializer_list<long long> cs);

  Field field() const { return f_; }
  Degree degree() const {
    return c_.empty() ? Degree::neg_infinity() : Degree((int)c_.size() - 1);
  }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  std::size_t coeff_count() const { return c_.size(); }
  /// Coefficient of X^i, zero when i exceeds the degree.
  FieldElement coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : f_.zero();
  }
  const FieldElement& leading() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  UniPoly scaled(const FieldElement& c) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  FieldElement eval(const FieldElement& x) const;
  UniPoly derivative() const;

  /// Division with remainder by a monic divisor. Non-monic divisors are
  /// rejected even when the leading coefficient is invertible.
  static std::pair<UniPoly, UniPoly> divmod_monic(const UniPoly& a,
                                                  const UniPoly& m);

  std::string str(const char* var = "X") const;

 private:
  void normalize();
  Field f_;
  std::vector<FieldElement> c_;
};

/// Bivariate polynomial in F[X][Y]: a dense vector of UniPoly coefficients
/// indexed by the power of Y.
class BiPoly {
 public:
  explicit BiPoly(Field f) : f_(f) {}
  BiPoly(Field f, std::vector<UniPoly> ycoeffs);

  static BiPoly from_x(const UniPoly& p);  // embed p(X)
  static BiPoly constant(const FieldElement& c);
  static BiPoly y(Field f);

  Field field() const { return f_; }
  Degree degree_y() const {
    return yc_.empty() ? Degree::neg_infinity() : Degree((int)yc_.size() - 1);
  }
  bool is_zero() const { return yc_.empty(); }
  /// Monic as a polynomial in Y over F[X].
  bool is_monic_y() const {
    return !yc_.empty() && yc_.back() == UniPoly::from_ints(f_, {1});
  }
  UniPoly coeff_y(std::size_t j) const {
    return j < yc_.size() ? yc_[j] : UniPoly(f_);
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);

  friend bool operator==(const BiPoly& a, const BiPoly& b);
  friend bool operator!=(const BiPoly& a, const BiPoly& b) {
    return !(a == b);
  }

  /// Substitute Y := y, leaving a polynomial in X.
  UniPoly eval_y(const FieldElement& y) const;
  /// Substitute Y := y then X := x, in that order.
  FieldElement eval2(const FieldElement& x, const FieldElement& y) const;
  /// Substitute Y := lambda(X).
  UniPoly subst_y(const UniPoly& lambda) const;

  BiPoly derivative_x() const;
  BiPoly derivative_y() const;

  /// Division with remainder by a divisor monic in Y.
  static std::pair<BiPoly, BiPoly> divmod_monic(const BiPoly& a,
                                                const BiPoly& m);

  std::string str() const;

 private:
  void normalize();
  Field f_;
  std::vector<UniPoly> yc_;
};

}  // namespace wcurve
