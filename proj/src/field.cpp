#include "wcurve/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace wcurve {
namespace detail {

namespace {

constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;  // largest allowed p
constexpr std::uint64_t kInvTableLimit = 1ull << 16;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 64-bit; p < 2^31 so everything fits
  long long t = 0, nt = 1, r = (long long)p, nr = (long long)(a % p);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw DivisionByZero("element has no inverse");
  if (t < 0) t += (long long)p;
  return (std::uint64_t)t;
}

// dense little polynomial helpers over GF(p), used for modulus validation and
// extension-field inversion; coefficients lowest first, not normalized
using PVec = std::vector<std::uint64_t>;

int pdeg(const PVec& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// a mod m, destructive on a; m need not be monic (leading coeff inverted)
void prem(PVec& a, const PVec& m, std::uint64_t p) {
  int dm = pdeg(m);
  std::uint64_t lcinv = mod_inverse(m[dm], p);
  for (int da = pdeg(a); da >= dm; da = pdeg(a)) {
    std::uint64_t c = (a[da] * lcinv) % p;
    for (int j = 0; j <= dm; ++j) {
      std::uint64_t sub = (c * m[j]) % p;
      std::uint64_t& t = a[da - dm + j];
      t = (t + p - sub) % p;
    }
  }
}

bool divides_exactly(const PVec& m, const PVec& g, std::uint64_t p) {
  PVec r = m;
  prem(r, g, p);
  return pdeg(r) < 0;
}

// trial factorization: m (monic, degree k >= 2) is reducible iff some monic
// polynomial of degree 1..k/2 divides it
bool is_irreducible(const std::vector<std::uint32_t>& mod, std::uint64_t p) {
  unsigned k = (unsigned)mod.size() - 1;
  if (k == 1) return true;
  PVec m(mod.begin(), mod.end());
  for (unsigned d = 1; 2 * d <= k; ++d) {
    PVec g(d + 1, 0);
    g[d] = 1;
    // counter over the d low coefficients, base p
    while (true) {
      if (divides_exactly(m, g, p)) return false;
      unsigned i = 0;
      for (; i < d; ++i) {
        if (++g[i] < p) break;
        g[i] = 0;
      }
      if (i == d) break;
    }
  }
  return true;
}

const std::map<std::pair<std::uint64_t, unsigned>,
               std::vector<std::uint32_t>>&
builtin_moduli() {
  static const std::map<std::pair<std::uint64_t, unsigned>,
                        std::vector<std::uint32_t>>
      table = {
          {{2, 2}, {1, 1, 1}},        // T^2 + T + 1
          {{2, 3}, {1, 1, 0, 1}},     // T^3 + T + 1
          {{2, 4}, {1, 1, 0, 0, 1}},  // T^4 + T + 1
          {{3, 2}, {1, 0, 1}},        // T^2 + 1
          {{3, 3}, {1, 2, 0, 1}},     // T^3 + 2T + 1
      };
  return table;
}

}  // namespace

struct FieldImpl {
  FieldKind kind = FieldKind::prime;
  std::uint64_t p = 0;  // characteristic (0 for rationals)
  unsigned k = 1;
  std::array<std::uint32_t, 17> mod{};  // modulus c0..ck (extension)
  std::uint64_t q = 0;                  // field order p^k (finite)
  std::vector<std::uint32_t> inv_table;  // index -> index of inverse (small q)
  bool has_builtin_modulus = false;

  FieldElement elem(FieldElement::Repr v) const {
    return FieldElement(this, std::move(v));
  }

  // ---- extension helpers ----

  ExtRepr ext_from_index(std::uint64_t n) const {
    ExtRepr r;
    r.k = k;
    for (unsigned i = 0; i < k; ++i) {
      r.c[i] = (std::uint32_t)(n % p);
      n /= p;
    }
    return r;
  }

  std::uint64_t ext_index(const ExtRepr& a) const {
    std::uint64_t n = 0;
    for (unsigned i = k; i-- > 0;) n = n * p + a.c[i];
    return n;
  }

  ExtRepr ext_add(const ExtRepr& a, const ExtRepr& b) const {
    ExtRepr r;
    r.k = k;
    for (unsigned i = 0; i < k; ++i)
      r.c[i] = (std::uint32_t)(((std::uint64_t)a.c[i] + b.c[i]) % p);
    return r;
  }

  ExtRepr ext_sub(const ExtRepr& a, const ExtRepr& b) const {
    ExtRepr r;
    r.k = k;
    for (unsigned i = 0; i < k; ++i)
      r.c[i] = (std::uint32_t)(((std::uint64_t)a.c[i] + p - b.c[i]) % p);
    return r;
  }

  ExtRepr ext_neg(const ExtRepr& a) const {
    ExtRepr r;
    r.k = k;
    for (unsigned i = 0; i < k; ++i)
      r.c[i] = a.c[i] ? (std::uint32_t)(p - a.c[i]) : 0;
    return r;
  }

  ExtRepr ext_mul(const ExtRepr& a, const ExtRepr& b) const {
    std::array<std::uint64_t, 33> t{};
    for (unsigned i = 0; i < k; ++i) {
      if (a.c[i] == 0) continue;
      for (unsigned j = 0; j < k; ++j)
        t[i + j] = (t[i + j] + (std::uint64_t)a.c[i] * b.c[j]) % p;
    }
    // reduce by the monic modulus: T^k = -(c0 + c1 T + ... + c_{k-1} T^{k-1})
    for (unsigned i = 2 * k - 2 + 1; i-- > k;) {
      std::uint64_t c = t[i];
      if (c == 0) continue;
      t[i] = 0;
      for (unsigned j = 0; j < k; ++j) {
        if (mod[j] == 0) continue;
        t[i - k + j] = (t[i - k + j] + (p - mod[j]) * c) % p;
      }
    }
    ExtRepr r;
    r.k = k;
    for (unsigned i = 0; i < k; ++i) r.c[i] = (std::uint32_t)t[i];
    return r;
  }

  ExtRepr ext_inv(const ExtRepr& a) const {
    // extended Euclid in GF(p)[T] against the modulus
    PVec r0(mod.begin(), mod.begin() + k + 1);
    PVec r1(a.c.begin(), a.c.begin() + k);
    if (pdeg(r1) < 0) throw DivisionByZero("inverse of zero");
    PVec t0(k + 1, 0), t1(k + 1, 0);
    t1[0] = 1;
    while (pdeg(r1) > 0) {
      // r0 = q*r1 + r; apply the same steps to t0/t1
      int d1 = pdeg(r1);
      std::uint64_t lcinv = mod_inverse(r1[d1], p);
      while (pdeg(r0) >= d1) {
        int d0 = pdeg(r0);
        std::uint64_t c = (r0[d0] * lcinv) % p;
        int shift = d0 - d1;
        for (int j = 0; j <= d1; ++j) {
          std::uint64_t sub = (c * r1[j]) % p;
          r0[shift + j] = (r0[shift + j] + p - sub) % p;
        }
        for (unsigned j = 0; j <= k; ++j) {
          std::uint64_t sub = (c * t1[j]) % p;
          // t0 -= c * T^shift * t1 (degrees stay below k+1)
          if (shift + (int)j <= (int)k)
            t0[shift + j] = (t0[shift + j] + p - sub) % p;
        }
      }
      std::swap(r0, r1);
      std::swap(t0, t1);
    }
    if (pdeg(r1) < 0) throw DivisionByZero("element has no inverse");
    std::uint64_t scale = mod_inverse(r1[0], p);
    ExtRepr out;
    out.k = k;
    for (unsigned i = 0; i < k; ++i)
      out.c[i] = (std::uint32_t)((t1[i] * scale) % p);
    return out;
  }
};

}  // namespace detail

using detail::FieldImpl;

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  FieldSpec s;
  s.kind = FieldKind::prime;
  s.p = p;
  s.k = 1;
  return s;
}

FieldSpec FieldSpec::extension_field(std::uint64_t p, unsigned k,
                                     std::vector<std::uint32_t> modulus) {
  FieldSpec s;
  s.kind = FieldKind::extension;
  s.p = p;
  s.k = k;
  s.modulus = std::move(modulus);
  return s;
}

FieldSpec FieldSpec::rationals() {
  FieldSpec s;
  s.kind = FieldKind::rational;
  return s;
}

// ---------------------------------------------------------------------------
// interning

namespace {

using RegistryKey =
    std::tuple<int, std::uint64_t, unsigned, std::vector<std::uint32_t>>;

const FieldImpl* intern_field(const FieldSpec& spec) {
  using detail::is_prime_u64;

  FieldImpl candidate;
  candidate.kind = spec.kind;

  if (spec.kind == FieldKind::rational) {
    candidate.p = 0;
    candidate.k = 1;
  } else {
    if (spec.p > detail::kMaxPrime || !detail::is_prime_u64(spec.p))
      throw NonPrimeModulus("p must be a prime below 2^31");
    candidate.p = spec.p;
    if (spec.kind == FieldKind::prime) {
      candidate.k = 1;
      candidate.q = spec.p;
    } else {
      if (spec.k < 1 || spec.k > 16)
        throw DegreeOutOfRange("extension degree must be in [1, 16]");
      candidate.k = spec.k;
      std::vector<std::uint32_t> m = spec.modulus;
      if (m.empty()) {
        auto it = detail::builtin_moduli().find({spec.p, spec.k});
        if (spec.k == 1) {
          m = {0, 1};  // plain T
        } else if (it != detail::builtin_moduli().end()) {
          m = it->second;
          candidate.has_builtin_modulus = true;
        } else {
          throw InvalidFieldSpec(
              "no built-in modulus for this (p, k); pass one explicitly");
        }
      } else {
        if (m.size() != spec.k + 1)
          throw InvalidFieldSpec("modulus must list k+1 coefficients");
        for (auto& c : m) c = (std::uint32_t)(c % spec.p);
        if (m.back() != 1) throw InvalidFieldSpec("modulus must be monic");
        auto it = detail::builtin_moduli().find({spec.p, spec.k});
        if (it != detail::builtin_moduli().end() && it->second == m)
          candidate.has_builtin_modulus = true;
      }
      // element indices live in uint64, so the order must fit; checked
      // before the irreducibility scan, which is slow for large p
      std::uint64_t q = 1;
      for (unsigned i = 0; i < spec.k; ++i) {
        if (q > (((std::uint64_t)1 << 62) / spec.p))
          throw InvalidFieldSpec("field order p^k exceeds 2^62");
        q *= spec.p;
      }
      candidate.q = q;
      if (!detail::is_irreducible(m, spec.p))
        throw ReducibleModulus("modulus factors over GF(p)");
      std::copy(m.begin(), m.end(), candidate.mod.begin());
    }
  }

  static std::mutex mu;
  static std::map<RegistryKey, std::unique_ptr<FieldImpl>> registry;

  RegistryKey key{(int)candidate.kind, candidate.p, candidate.k,
                  std::vector<std::uint32_t>(
                      candidate.mod.begin(),
                      candidate.mod.begin() + (candidate.kind ==
                                                       FieldKind::extension
                                                   ? candidate.k + 1
                                                   : 0))};

  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();

  auto impl = std::make_unique<FieldImpl>(candidate);
  if (impl->kind != FieldKind::rational && impl->q <= detail::kInvTableLimit) {
    impl->inv_table.assign(impl->q, 0);
    for (std::uint64_t i = 1; i < impl->q; ++i) {
      if (impl->kind == FieldKind::prime) {
        impl->inv_table[i] = (std::uint32_t)detail::mod_inverse(i, impl->p);
      } else {
        impl->inv_table[i] =
            (std::uint32_t)impl->ext_index(impl->ext_inv(impl->ext_from_index(i)));
      }
    }
  }
  const FieldImpl* out = impl.get();
  registry.emplace(std::move(key), std::move(impl));
  return out;
}

const FieldImpl* require_same_field(const FieldImpl* fa, const FieldImpl* fb) {
  if (fa == nullptr || fb == nullptr)
    throw FieldMismatch("operation on detached field element");
  if (fa != fb) throw FieldMismatch("elements belong to different fields");
  return fa;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::make(const FieldSpec& spec) { return Field(intern_field(spec)); }

FieldKind Field::kind() const { return impl_->kind; }

std::uint64_t Field::characteristic() const { return impl_->p; }

bool Field::is_finite() const { return impl_->kind != FieldKind::rational; }

std::uint64_t Field::order() const {
  if (!is_finite()) throw InfiniteField("the rationals are infinite");
  return impl_->q;
}

unsigned Field::degree() const { return impl_->k; }

std::string Field::str() const {
  std::ostringstream os;
  switch (impl_->kind) {
    case FieldKind::rational:
      os << "rational";
      break;
    case FieldKind::prime:
      os << "q(" << impl_->p << ")";
      break;
    case FieldKind::extension:
      os << "q(" << impl_->p << "^" << impl_->k;
      if (!impl_->has_builtin_modulus) {
        os << ",m=";
        for (unsigned i = 0; i <= impl_->k; ++i)
          os << (i ? "," : "") << impl_->mod[i];
      }
      os << ")";
      break;
  }
  return os.str();
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long n) const {
  switch (impl_->kind) {
    case FieldKind::prime: {
      long long r = n % (long long)impl_->p;
      if (r < 0) r += (long long)impl_->p;
      return impl_->elem((std::uint64_t)r);
    }
    case FieldKind::extension: {
      long long r = n % (long long)impl_->p;
      if (r < 0) r += (long long)impl_->p;
      ExtRepr e;
      e.k = impl_->k;
      e.c[0] = (std::uint32_t)r;
      return impl_->elem(e);
    }
    case FieldKind::rational:
      return impl_->elem(mpq_class(static_cast<long>(n), 1));
  }
  throw Error("unreachable");
}

FieldElement Field::from_mpz(const mpz_class& n) const {
  if (impl_->kind == FieldKind::rational) return impl_->elem(mpq_class(n));
  mpz_class r = n % (unsigned long)impl_->p;
  if (r < 0) r += (unsigned long)impl_->p;
  return from_int(r.get_si());
}

FieldElement Field::element(std::uint64_t index) const {
  if (!is_finite()) throw InfiniteField("cannot index the rationals");
  if (index >= impl_->q) throw Error("element index out of range");
  if (impl_->kind == FieldKind::prime) return impl_->elem(index);
  return impl_->elem(impl_->ext_from_index(index));
}

std::uint64_t Field::index(const FieldElement& a) const {
  if (!is_finite()) throw InfiniteField("cannot index the rationals");
  if (a.f_ != impl_) throw FieldMismatch("element from another field");
  if (impl_->kind == FieldKind::prime) return std::get<std::uint64_t>(a.v_);
  return impl_->ext_index(std::get<ExtRepr>(a.v_));
}

std::vector<FieldElement> Field::elements() const {
  if (!is_finite()) throw InfiniteField("cannot enumerate the rationals");
  std::vector<FieldElement> out;
  out.reserve(impl_->q);
  for (std::uint64_t i = 0; i < impl_->q; ++i) out.push_back(element(i));
  return out;
}

// ---------------------------------------------------------------------------
// FieldElement arithmetic

bool FieldElement::is_zero() const {
  switch (v_.index()) {
    case 0:
      return std::get<std::uint64_t>(v_) == 0;
    case 1: {
      const auto& e = std::get<ExtRepr>(v_);
      return std::all_of(e.c.begin(), e.c.begin() + e.k,
                         [](std::uint32_t c) { return c == 0; });
    }
    default:
      return std::get<mpq_class>(v_) == 0;
  }
}

bool FieldElement::is_one() const {
  switch (v_.index()) {
    case 0:
      return std::get<std::uint64_t>(v_) == 1;
    case 1: {
      const auto& e = std::get<ExtRepr>(v_);
      if (e.c[0] != 1) return false;
      return std::all_of(e.c.begin() + 1, e.c.begin() + e.k,
                         [](std::uint32_t c) { return c == 0; });
    }
    default:
      return std::get<mpq_class>(v_) == 1;
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const FieldImpl* f = require_same_field(a.f_, b.f_);
  switch (f->kind) {
    case FieldKind::prime:
      return f->elem((std::get<std::uint64_t>(a.v_) +
                      std::get<std::uint64_t>(b.v_)) %
                     f->p);
    case FieldKind::extension:
      return f->elem(
          f->ext_add(std::get<ExtRepr>(a.v_), std::get<ExtRepr>(b.v_)));
    default:
      return f->elem(
          mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
  }
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const FieldImpl* f = require_same_field(a.f_, b.f_);
  switch (f->kind) {
    case FieldKind::prime:
      return f->elem((std::get<std::uint64_t>(a.v_) + f->p -
                      std::get<std::uint64_t>(b.v_)) %
                     f->p);
    case FieldKind::extension:
      return f->elem(
          f->ext_sub(std::get<ExtRepr>(a.v_), std::get<ExtRepr>(b.v_)));
    default:
      return f->elem(
          mpq_class(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_)));
  }
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldImpl* f = require_same_field(a.f_, b.f_);
  switch (f->kind) {
    case FieldKind::prime:
      return f->elem((std::get<std::uint64_t>(a.v_) *
                      std::get<std::uint64_t>(b.v_)) %
                     f->p);
    case FieldKind::extension:
      return f->elem(
          f->ext_mul(std::get<ExtRepr>(a.v_), std::get<ExtRepr>(b.v_)));
    default:
      return f->elem(
          mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
  }
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inv();
}

FieldElement operator-(const FieldElement& a) {
  if (a.f_ == nullptr) throw FieldMismatch("negating a detached element");
  const FieldImpl* f = a.f_;
  switch (f->kind) {
    case FieldKind::prime: {
      std::uint64_t v = std::get<std::uint64_t>(a.v_);
      return f->elem(v ? f->p - v : 0);
    }
    case FieldKind::extension:
      return f->elem(f->ext_neg(std::get<ExtRepr>(a.v_)));
    default:
      return f->elem(mpq_class(-std::get<mpq_class>(a.v_)));
  }
}

FieldElement operator*(long long n, const FieldElement& a) {
  return a.field().from_int(n) * a;
}

FieldElement FieldElement::inv() const {
  if (f_ == nullptr) throw FieldMismatch("inverting a detached element");
  if (is_zero()) throw DivisionByZero("inverse of zero");
  switch (f_->kind) {
    case FieldKind::prime: {
      std::uint64_t v = std::get<std::uint64_t>(v_);
      if (!f_->inv_table.empty()) return f_->elem((std::uint64_t)f_->inv_table[v]);
      return f_->elem(detail::mod_inverse(v, f_->p));
    }
    case FieldKind::extension: {
      const auto& e = std::get<ExtRepr>(v_);
      if (!f_->inv_table.empty())
        return f_->elem(f_->ext_from_index(f_->inv_table[f_->ext_index(e)]));
      return f_->elem(f_->ext_inv(e));
    }
    default: {
      const auto& r = std::get<mpq_class>(v_);
      return f_->elem(mpq_class(1 / r));
    }
  }
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.f_ != b.f_) return false;
  if (a.f_ == nullptr) return true;
  switch (a.f_->kind) {
    case FieldKind::prime:
      return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
    case FieldKind::extension:
      return std::get<ExtRepr>(a.v_) == std::get<ExtRepr>(b.v_);
    default:
      return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
  }
}

FieldElement pow(const FieldElement& a, long long n) {
  FieldElement base = a;
  if (n < 0) {
    base = a.inv();
    n = -n;
  }
  FieldElement acc = a.field().one();
  unsigned long long e = (unsigned long long)n;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// literals

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  s = trimmed(s);
  if (s.empty()) throw ParseError("empty integer literal");
  std::string t(s);
  size_t start = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (start == t.size()) throw ParseError("malformed integer literal");
  for (size_t i = start; i < t.size(); ++i)
    if (!isdigit((unsigned char)t[i]))
      throw ParseError("malformed integer literal: '" + t + "'");
  return mpz_class(t);
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

FieldElement Field::parse_element(std::string_view text) const {
  std::string_view s = trimmed(text);
  if (s.empty()) throw ParseError("empty element literal");

  if (impl_->kind == FieldKind::rational) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
      return impl_->elem(mpq_class(parse_integer(s)));
    }
    mpz_class num = parse_integer(s.substr(0, slash));
    mpz_class den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational literal");
    mpq_class r(num, den);
    r.canonicalize();
    return impl_->elem(std::move(r));
  }

  bool bracketed = s.front() == '[';
  if (bracketed) {
    if (s.back() != ']') throw ParseError("unbalanced '[' in element literal");
    s = trimmed(s.substr(1, s.size() - 2));
  }

  if (impl_->kind == FieldKind::prime) {
    if (s.find(',') != std::string_view::npos)
      throw ParseError("prime-field element must be a single integer");
    return from_mpz(parse_integer(s));
  }

  // extension: coefficient vector or single integer index
  if (s.find(',') != std::string_view::npos) {
    auto parts = split_commas(s);
    if (parts.size() != impl_->k)
      throw ParseError("expected " + std::to_string(impl_->k) +
                       " coefficients in element literal");
    ExtRepr e;
    e.k = impl_->k;
    for (unsigned i = 0; i < impl_->k; ++i) {
      mpz_class c = parse_integer(parts[i]) % (unsigned long)impl_->p;
      if (c < 0) c += (unsigned long)impl_->p;
      e.c[i] = (std::uint32_t)c.get_ui();
    }
    return impl_->elem(e);
  }
  mpz_class n = parse_integer(s) % (unsigned long)impl_->q;
  if (n < 0) n += (unsigned long)impl_->q;
  return element(n.get_ui());
}

std::string FieldElement::str() const {
  if (f_ == nullptr) return "0";
  switch (f_->kind) {
    case FieldKind::prime:
      return std::to_string(std::get<std::uint64_t>(v_));
    case FieldKind::extension: {
      const auto& e = std::get<ExtRepr>(v_);
      std::ostringstream os;
      os << "[";
      for (unsigned i = 0; i < e.k; ++i) os << (i ? "," : "") << e.c[i];
      os << "]";
      return os.str();
    }
    default: {
      const auto& r = std::get<mpq_class>(v_);
      if (r.get_den() == 1) return r.get_num().get_str();
      return r.get_num().get_str() + "/" + r.get_den().get_str();
    }
  }
}

// ---------------------------------------------------------------------------
// field spec grammar

Field Field::parse(std::string_view text) {
  std::string_view s = trimmed(text);
  if (s == "rational") return make(FieldSpec::rationals());
  if (s.size() < 4 || s.substr(0, 2) != "q(" || s.back() != ')')
    throw ParseError("malformed field spec: '" + std::string(text) + "'");
  std::string_view body = s.substr(2, s.size() - 3);

  std::string_view head = body;
  std::string_view mod_part;
  size_t comma = body.find(',');
  if (comma != std::string_view::npos) {
    head = trimmed(body.substr(0, comma));
    mod_part = trimmed(body.substr(comma + 1));
  }

  std::uint64_t p = 0;
  unsigned k = 1;
  size_t caret = head.find('^');
  auto parse_u64 = [](std::string_view v, const char* what) -> std::uint64_t {
    mpz_class n = parse_integer(v);
    if (n <= 0 || !n.fits_ulong_p())
      throw ParseError(std::string("malformed ") + what + " in field spec");
    return n.get_ui();
  };
  if (caret == std::string_view::npos) {
    p = parse_u64(head, "prime");
  } else {
    p = parse_u64(trimmed(head.substr(0, caret)), "prime");
    std::uint64_t kk = parse_u64(trimmed(head.substr(caret + 1)), "degree");
    if (kk > 64) throw ParseError("malformed degree in field spec");
    k = (unsigned)kk;
  }

  std::vector<std::uint32_t> modulus;
  if (!mod_part.empty()) {
    if (mod_part.substr(0, 2) != "m=")
      throw ParseError("expected m=<coefficients> in field spec");
    for (auto part : split_commas(mod_part.substr(2))) {
      mpz_class c = parse_integer(part);
      if (c < 0 || !c.fits_ulong_p() || c.get_ui() > 0xffffffffull)
        throw ParseError("modulus coefficients must be small non-negative");
      modulus.push_back((std::uint32_t)c.get_ui());
    }
  }

  if (caret == std::string_view::npos && modulus.empty())
    return make(FieldSpec::prime_field(p));
  return make(FieldSpec::extension_field(p, k, std::move(modulus)));
}

}  // namespace wcurve
