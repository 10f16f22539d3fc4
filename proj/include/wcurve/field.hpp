#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "wcurve/error.hpp"

namespace wcurve {

enum class FieldKind { prime, extension, rational };

/// Description of a field: GF(p), GF(p^k) with an explicit or built-in
/// modulus, or the rationals.
struct FieldSpec {
  FieldKind kind = FieldKind::prime;
  std::uint64_t p = 0;
  unsigned k = 1;
  /// Modulus coefficients c0..ck, lowest degree first; empty selects the
  /// built-in modulus for that (p, k) if one exists.
  std::vector<std::uint32_t> modulus;

  static FieldSpec prime_field(std::uint64_t p);
  static FieldSpec extension_field(std::uint64_t p, unsigned k,
                                   std::vector<std::uint32_t> modulus = {});
  static FieldSpec rationals();
};

namespace detail {
struct FieldImpl;
}

class FieldElement;

/// Value handle to an immutable, interned field. Copying is free and two
/// handles compare equal exactly when they denote the same field.
class Field {
 public:
  Field() = default;

  /// Validates the spec and returns the interned field.
  /// Throws NonPrimeModulus, DegreeOutOfRange, ReducibleModulus,
  /// InvalidFieldSpec.
  static Field make(const FieldSpec& spec);

  /// Parses "q(<p>)", "q(<p>^<k>[,m=<c0,...,ck>])" or "rational".
  static Field parse(std::string_view text);

  FieldKind kind() const;
  std::uint64_t characteristic() const;  // 0 for the rationals
  bool is_finite() const;
  std::uint64_t order() const;  // throws InfiniteField
  unsigned degree() const;      // extension degree k (1 for prime fields)
  std::string str() const;      // canonical spec string

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long n) const;
  FieldElement from_mpz(const mpz_class& n) const;
  FieldElement operator()(long long n) const;

  /// index <-> element bijection for finite fields; enumeration order is
  /// ascending index, where an extension element (c0,...,c_{k-1}) has index
  /// sum c_i * p^i.
  FieldElement element(std::uint64_t index) const;
  std::uint64_t index(const FieldElement& a) const;
  std::vector<FieldElement> elements() const;  // throws InfiniteField

  /// Element literal grammar: integer / "a/b" (rationals) /
  /// "c0,c1,..." or "[c0,c1,...]" or integer index (extensions).
  FieldElement parse_element(std::string_view text) const;

  bool operator==(const Field& o) const { return impl_ == o.impl_; }
  bool operator!=(const Field& o) const = default;

  const detail::FieldImpl* impl() const { return impl_; }

 private:
  explicit Field(const detail::FieldImpl* impl) : impl_(impl) {}
  const detail::FieldImpl* impl_ = nullptr;
  friend class FieldElement;
};

/// Extension-field element representation: coefficients of the polynomial
/// basis 1, T, ..., T^{k-1}, lowest first, entries reduced mod p. Unused
/// slots stay zero so default equality is structural equality.
struct ExtRepr {
  std::array<std::uint32_t, 16> c{};
  std::uint32_t k = 0;
  bool operator==(const ExtRepr&) const = default;
};

class FieldElement {
 public:
  FieldElement() = default;  // detached zero; usable only after assignment

  Field field() const { return Field(f_); }
  bool is_zero() const;
  bool is_one() const;

  FieldElement inv() const;  // throws DivisionByZero

  std::string str() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  /// Integer multiple n·a (n is reduced through the field characteristic).
  friend FieldElement operator*(long long n, const FieldElement& a);

  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  using Repr = std::variant<std::uint64_t, ExtRepr, mpq_class>;
  FieldElement(const detail::FieldImpl* f, Repr v)
      : f_(f), v_(std::move(v)) {}

  const detail::FieldImpl* f_ = nullptr;
  Repr v_ = std::uint64_t{0};

  friend class Field;
  friend struct detail::FieldImpl;
};

inline FieldElement Field::operator()(long long n) const {
  return from_int(n);
}

/// a^n with a^0 = 1; negative n inverts first (throws DivisionByZero on 0).
FieldElement pow(const FieldElement& a, long long n);

}  // namespace wcurve
