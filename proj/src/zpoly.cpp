#include "wcurve/zpoly.hpp"

#include <sstream>

namespace wcurve {

const char* var_name(Var v) {
  static const char* names[kVarCount] = {"a1", "a2", "a3", "a4", "a6", "x",
                                         "y",  "x1", "y1", "x2", "y2", "l",
                                         "X",  "Y"};
  return names[(unsigned)v];
}

ZPoly::ZPoly(long n) {
  if (n != 0) terms_.emplace(Exponents{}, mpz_class(n));
}

ZPoly::ZPoly(const mpz_class& n) {
  if (n != 0) terms_.emplace(Exponents{}, n);
}

ZPoly ZPoly::var(Var v) {
  ZPoly p;
  Exponents e{};
  e[(unsigned)v] = 1;
  p.terms_.emplace(e, mpz_class(1));
  return p;
}

void ZPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

ZPoly operator-(const ZPoly& a) {
  ZPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ZPoly::Exponents e;
      for (unsigned i = 0; i < kVarCount; ++i) {
        unsigned s = (unsigned)ea[i] + eb[i];
        if (s > 255) throw Error("exponent overflow in term product");
        e[i] = (std::uint8_t)s;
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

ZPoly operator*(long n, const ZPoly& a) { return ZPoly(n) * a; }

FieldElement ZPoly::eval(
    const Field& f, const std::array<FieldElement, kVarCount>& point) const {
  FieldElement acc = f.zero();
  for (const auto& [e, c] : terms_) {
    FieldElement t = f.from_mpz(c);
    for (unsigned i = 0; i < kVarCount; ++i)
      for (unsigned j = 0; j < e[i]; ++j) t = t * point[i];
    acc = acc + t;
  }
  return acc;
}

std::string ZPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = false;
    for (unsigned i = 0; i < kVarCount; ++i)
      if (e[i]) has_vars = true;
    bool need_star = false;
    if (abs_c != 1 || !has_vars) {
      os << abs_c.get_str();
      need_star = true;
    }
    for (unsigned i = 0; i < kVarCount; ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << var_name((Var)i);
      if (e[i] > 1) os << "^" << (unsigned)e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace wcurve
