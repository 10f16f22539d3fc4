#include "wcurve/poly.hpp"

#include <sstream>

namespace wcurve {

namespace {

void require_field(const Field& a, const Field& b) {
  if (a != b) throw FieldMismatch("polynomials over different fields");
}

}  // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(Field f, std::vector<FieldElement> coeffs)
    : f_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != f_) throw FieldMismatch("coefficient from another field");
  normalize();
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const FieldElement& c) {
  UniPoly p(c.field());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

UniPoly UniPoly::x(Field f) {
  UniPoly p(f);
  p.c_ = {f.zero(), f.one()};
  return p;
}

UniPoly UniPoly::from_ints(Field f, std::initializer_list<long long> cs) {
  std::vector<FieldElement> v;
  v.reserve(cs.size());
  for (long long c : cs) v.push_back(f.from_int(c));
  return UniPoly(f, std::move(v));
}

const FieldElement& UniPoly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
  return c_.back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_field(a.f_, b.f_);
  UniPoly r(a.f_);
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  r.c_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.c_.push_back(a.coeff(i) + b.coeff(i));
  r.normalize();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  require_field(a.f_, b.f_);
  UniPoly r(a.f_);
  std::size_t n = std::max(a.c_.size(), b.c_.size());
  r.c_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.c_.push_back(a.coeff(i) - b.coeff(i));
  r.normalize();
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_field(a.f_, b.f_);
  UniPoly r(a.f_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, a.f_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r(a.f_);
  r.c_.reserve(a.c_.size());
  for (const auto& c : a.c_) r.c_.push_back(-c);
  return r;
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
  if (c.field() != f_) throw FieldMismatch("scalar from another field");
  UniPoly r(f_);
  if (c.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& a : c_) r.c_.push_back(a * c);
  r.normalize();
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  return a.f_ == b.f_ && a.c_ == b.c_;
}

FieldElement UniPoly::eval(const FieldElement& x) const {
  if (x.field() != f_) throw FieldMismatch("evaluation point from another field");
  FieldElement acc = f_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly r(f_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back((long long)i * c_[i]);
  r.normalize();
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod_monic(const UniPoly& a,
                                                  const UniPoly& m) {
  require_field(a.f_, m.f_);
  if (!m.is_monic()) throw NonMonicDivisor("divisor is not monic");
  int dm = m.degree().value();
  UniPoly q(a.f_), r = a;
  if (r.degree() < m.degree()) return {q, r};
  q.c_.assign((std::size_t)(r.degree().value() - dm + 1), a.f_.zero());
  while (!r.is_zero() && r.degree() >= m.degree()) {
    int dr = r.degree().value();
    FieldElement c = r.c_.back();
    q.c_[(std::size_t)(dr - dm)] = c;
    for (int j = 0; j <= dm; ++j)
      r.c_[(std::size_t)(dr - dm + j)] -= c * m.coeff((std::size_t)j);
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

std::string UniPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i].str();
    } else {
      if (!c_[i].is_one()) os << c_[i].str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(Field f, std::vector<UniPoly> ycoeffs)
    : f_(f), yc_(std::move(ycoeffs)) {
  for (const auto& p : yc_)
    if (p.field() != f_) throw FieldMismatch("coefficient over another field");
  normalize();
}

void BiPoly::normalize() {
  while (!yc_.empty() && yc_.back().is_zero()) yc_.pop_back();
}

BiPoly BiPoly::from_x(const UniPoly& p) {
  BiPoly r(p.field());
  if (!p.is_zero()) r.yc_ = {p};
  return r;
}

BiPoly BiPoly::constant(const FieldElement& c) {
  return from_x(UniPoly::constant(c));
}

BiPoly BiPoly::y(Field f) {
  BiPoly r(f);
  r.yc_ = {UniPoly(f), UniPoly::from_ints(f, {1})};
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  require_field(a.f_, b.f_);
  BiPoly r(a.f_);
  std::size_t n = std::max(a.yc_.size(), b.yc_.size());
  r.yc_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) r.yc_.push_back(a.coeff_y(j) + b.coeff_y(j));
  r.normalize();
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  require_field(a.f_, b.f_);
  BiPoly r(a.f_);
  std::size_t n = std::max(a.yc_.size(), b.yc_.size());
  r.yc_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) r.yc_.push_back(a.coeff_y(j) - b.coeff_y(j));
  r.normalize();
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_field(a.f_, b.f_);
  BiPoly r(a.f_);
  if (a.is_zero() || b.is_zero()) return r;
  r.yc_.assign(a.yc_.size() + b.yc_.size() - 1, UniPoly(a.f_));
  for (std::size_t i = 0; i < a.yc_.size(); ++i) {
    if (a.yc_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.yc_.size(); ++j)
      r.yc_[i + j] = r.yc_[i + j] + a.yc_[i] * b.yc_[j];
  }
  r.normalize();
  return r;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r(a.f_);
  r.yc_.reserve(a.yc_.size());
  for (const auto& p : a.yc_) r.yc_.push_back(-p);
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  return a.f_ == b.f_ && a.yc_ == b.yc_;
}

UniPoly BiPoly::eval_y(const FieldElement& y) const {
  if (y.field() != f_) throw FieldMismatch("evaluation point from another field");
  UniPoly acc(f_);
  for (std::size_t j = yc_.size(); j-- > 0;) acc = acc.scaled(y) + yc_[j];
  return acc;
}

FieldElement BiPoly::eval2(const FieldElement& x,
                           const FieldElement& y) const {
  return eval_y(y).eval(x);
}

UniPoly BiPoly::subst_y(const UniPoly& lambda) const {
  require_field(f_, lambda.field());
  UniPoly acc(f_);
  for (std::size_t j = yc_.size(); j-- > 0;) acc = acc * lambda + yc_[j];
  return acc;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r(f_);
  r.yc_.reserve(yc_.size());
  for (const auto& p : yc_) r.yc_.push_back(p.derivative());
  r.normalize();
  return r;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly r(f_);
  for (std::size_t j = 1; j < yc_.size(); ++j)
    r.yc_.push_back(yc_[j].scaled(f_.from_int((long long)j)));
  r.normalize();
  return r;
}

std::pair<BiPoly, BiPoly> BiPoly::divmod_monic(const BiPoly& a,
                                               const BiPoly& m) {
  require_field(a.f_, m.f_);
  if (m.is_zero() || !m.is_monic_y())
    throw NonMonicDivisor("divisor is not monic in Y");
  int dm = m.degree_y().value();
  BiPoly q(a.f_), r = a;
  while (!r.is_zero() && r.degree_y() >= m.degree_y()) {
    int dr = r.degree_y().value();
    UniPoly c = r.yc_.back();
    // q += c * Y^(dr-dm); r -= c * Y^(dr-dm) * m
    std::vector<UniPoly> term((std::size_t)(dr - dm), UniPoly(a.f_));
    term.push_back(c);
    q = q + BiPoly(a.f_, term);
    for (int j = 0; j <= dm; ++j) {
      std::size_t idx = (std::size_t)(dr - dm + j);
      r.yc_[idx] = r.yc_[idx] - c * m.coeff_y((std::size_t)j);
    }
    r.normalize();
  }
  return {q, r};
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < yc_.size(); ++j) {
    if (yc_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << "(" << yc_[j].str() << ")";
    } else {
      os << "(" << yc_[j].str() << ")*Y";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace wcurve
