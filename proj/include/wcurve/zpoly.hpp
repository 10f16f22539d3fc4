#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "wcurve/field.hpp"

namespace wcurve {

/// Variables of the shared symbolic ring: curve coefficients, a generic
/// curve point (x, y), two addition inputs (x1, y1), (x2, y2), a slope l,
/// and the indeterminates X, Y.
enum class Var : unsigned {
  a1,
  a2,
  a3,
  a4,
  a6,
  x,
  y,
  x1,
  y1,
  x2,
  y2,
  l,
  X,
  Y,
};
constexpr unsigned kVarCount = 14;
const char* var_name(Var v);

/// Sparse multivariate polynomial with exact integer coefficients in the
/// fixed 14-variable ring above. Terms are kept in a canonical order and
/// zero coefficients are never stored, so equality is structural.
class ZPoly {
 public:
  using Exponents = std::array<std::uint8_t, kVarCount>;

  ZPoly() = default;
  ZPoly(long n);
  explicit ZPoly(const mpz_class& n);
  static ZPoly var(Var v);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a);
  friend ZPoly operator*(long n, const ZPoly& a);
  ZPoly& operator+=(const ZPoly& b) { return *this = *this + b; }
  ZPoly& operator-=(const ZPoly& b) { return *this = *this - b; }

  friend bool operator==(const ZPoly& a, const ZPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  /// Substitute a field value for every variable; integer coefficients map
  /// through Field::from_mpz.
  FieldElement eval(const Field& f,
                    const std::array<FieldElement, kVarCount>& point) const;

  std::string str() const;

  const std::map<Exponents, mpz_class>& terms() const { return terms_; }

 private:
  void add_term(const Exponents& e, const mpz_class& c);
  std::map<Exponents, mpz_class> terms_;
};

}  // namespace wcurve
