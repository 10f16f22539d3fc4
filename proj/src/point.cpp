#include "wcurve/point.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace wcurve {

Point Point::affine(const WeierstrassCurve& w, FieldElement x,
                    FieldElement y) {
  if (x.field() != w.f || y.field() != w.f)
    throw FieldMismatch("point coordinates from another field");
  if (!nonsingular(w, x, y))
    throw SingularPoint("(" + x.str() + "," + y.str() +
                        ") is not a nonsingular curve point");
  Point p;
  p.aff_ = Affine{std::move(x), std::move(y)};
  return p;
}

std::string Point::str() const {
  if (is_zero()) return "O";
  return aff_->x.str() + "," + aff_->y.str();
}

FieldElement neg_y(const WeierstrassCurve& w, const FieldElement& x,
                   const FieldElement& y) {
  return -y - (w.a1 * x + w.a3);
}

FieldElement slope(const WeierstrassCurve& w, const FieldElement& x1,
                   const FieldElement& x2, const FieldElement& y1,
                   const FieldElement& y2) {
  if (x1 == x2) {
    if (y1 == neg_y(w, x2, y2)) return w.f.zero();  // vertical: unused value
    FieldElement den = y1 - neg_y(w, x1, y1);
    if (den.is_zero())
      throw DegenerateTangent("tangent slope undefined at this point");
    return ((3 * x1 + 2 * w.a2) * x1 + w.a4 - w.a1 * y1) / den;
  }
  return (y1 - y2) / (x1 - x2);
}

FieldElement add_x(const WeierstrassCurve& w, const FieldElement& x1,
                   const FieldElement& x2, const FieldElement& l) {
  return l * l + w.a1 * l - w.a2 - x1 - x2;
}

FieldElement add_y_prime(const WeierstrassCurve& w, const FieldElement& x1,
                         const FieldElement& x2, const FieldElement& y1,
                         const FieldElement& l) {
  return l * (add_x(w, x1, x2, l) - x1) + y1;
}

FieldElement add_y(const WeierstrassCurve& w, const FieldElement& x1,
                   const FieldElement& x2, const FieldElement& y1,
                   const FieldElement& l) {
  return neg_y(w, add_x(w, x1, x2, l), add_y_prime(w, x1, x2, y1, l));
}

Point neg(const WeierstrassCurve& w, const Point& p) {
  if (p.is_zero()) return Point::zero();
  return Point::affine(w, p.x(), neg_y(w, p.x(), p.y()));
}

Point add(const WeierstrassCurve& w, const Point& p1, const Point& p2) {
  if (p1.is_zero()) return p2;
  if (p2.is_zero()) return p1;
  const FieldElement& x1 = p1.x();
  const FieldElement& y1 = p1.y();
  const FieldElement& x2 = p2.x();
  const FieldElement& y2 = p2.y();
  if (x1 == x2 && y1 == neg_y(w, x2, y2)) return Point::zero();
  FieldElement l = slope(w, x1, x2, y1, y2);
  return Point::affine(w, add_x(w, x1, x2, l), add_y(w, x1, x2, y1, l));
}

Point smul(const WeierstrassCurve& w, long long n, const Point& p) {
  if (n < 0) return neg(w, smul(w, -n, p));
  Point acc = Point::zero();
  Point base = p;
  unsigned long long e = (unsigned long long)n;
  while (e) {
    if (e & 1) acc = add(w, acc, base);
    if (e >>= 1) base = add(w, base, base);
  }
  return acc;
}

std::vector<Point> enumerate_points(const WeierstrassCurve& w) {
  std::uint64_t q = w.f.order();
  std::vector<Point> pts;
  pts.push_back(Point::zero());
  for (std::uint64_t i = 0; i < q; ++i) {
    FieldElement x = w.f.element(i);
    for (std::uint64_t j = 0; j < q; ++j) {
      FieldElement y = w.f.element(j);
      if (nonsingular(w, x, y)) pts.push_back(Point::affine(w, x, y));
    }
  }
  return pts;
}

GroupStructure group_structure(const WeierstrassCurve& w) {
  std::vector<Point> pts = enumerate_points(w);
  std::uint64_t n = pts.size();
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  std::uint64_t exponent = 1;
  for (const Point& p : pts) {
    for (std::uint64_t d : divisors) {
      if (smul(w, (long long)d, p).is_zero()) {
        exponent = std::lcm(exponent, d);
        break;
      }
    }
  }
  GroupStructure g;
  g.order = n;
  g.n2 = exponent;
  g.n1 = n / exponent;
  return g;
}

Point map_point(const WeierstrassCurve& w, const VariableChange& c,
                const Point& p) {
  if (p.is_zero()) return Point::zero();
  FieldElement ui = c.u.inv();
  FieldElement ui2 = ui * ui;
  FieldElement dx = p.x() - c.r;
  FieldElement nx = ui2 * dx;
  FieldElement ny = ui2 * ui * (p.y() - c.s * dx - c.t);
  return Point::affine(variable_change(w, c), nx, ny);
}

// ---------------------------------------------------------------------------
// group-law scan

namespace {

struct ScanChunk {
  GroupLawScan result;
  std::uint64_t first_failure_index = ~0ull;
};

void note_failure(ScanChunk& chunk, std::uint64_t curve_index,
                  const WeierstrassCurve& w, const std::string& what) {
  chunk.result.failures++;
  if (curve_index < chunk.first_failure_index) {
    chunk.first_failure_index = curve_index;
    std::ostringstream os;
    os << "curve " << w.a1.str() << "," << w.a2.str() << "," << w.a3.str()
       << "," << w.a4.str() << "," << w.a6.str() << " over " << w.f.str()
       << ": " << what;
    chunk.result.first_failure = os.str();
  }
}

WeierstrassCurve curve_from_index(const Field& f, std::uint64_t index) {
  std::uint64_t q = f.order();
  FieldElement a[5] = {f.zero(), f.zero(), f.zero(), f.zero(), f.zero()};
  for (int i = 0; i < 5; ++i) {
    a[i] = f.element(index % q);
    index /= q;
  }
  return WeierstrassCurve{f, a[0], a[1], a[2], a[3], a[4]};
}

void scan_one_curve(ScanChunk& chunk, std::uint64_t index,
                    const WeierstrassCurve& w) {
  std::uint64_t q = w.f.order();
  std::vector<Point> pts;
  try {
    pts = enumerate_points(w);
  } catch (const Error& e) {
    note_failure(chunk, index, w, std::string("enumeration: ") + e.what());
    return;
  }
  std::size_t n = pts.size();
  chunk.result.points += n;

  // coordinate -> position lookup for locating sums
  std::vector<std::int32_t> pos(q * q, -1);
  for (std::size_t i = 1; i < n; ++i)
    pos[w.f.index(pts[i].x()) * q + w.f.index(pts[i].y())] = (std::int32_t)i;

  std::vector<std::int32_t> table(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Point s = Point::zero();
      try {
        s = add(w, pts[i], pts[j]);
      } catch (const Error& e) {
        note_failure(chunk, index, w,
                     "add(" + pts[i].str() + ", " + pts[j].str() + "): " +
                         e.what());
        return;
      }
      std::int32_t where;
      if (s.is_zero()) {
        where = 0;
      } else {
        where = pos[w.f.index(s.x()) * q + w.f.index(s.y())];
        if (where < 0) {
          note_failure(chunk, index, w,
                       "sum " + s.str() + " escapes the point set");
          return;
        }
      }
      table[i * n + j] = where;
    }
  }

  // identity and inverses
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i] != (std::int32_t)i || table[i * n] != (std::int32_t)i) {
      note_failure(chunk, index, w, "identity fails at " + pts[i].str());
      return;
    }
    Point m = neg(w, pts[i]);
    std::int32_t mi =
        m.is_zero() ? 0 : pos[w.f.index(m.x()) * q + w.f.index(m.y())];
    if (mi < 0 || table[i * n + (std::size_t)mi] != 0) {
      note_failure(chunk, index, w, "inverse fails at " + pts[i].str());
      return;
    }
  }
  // commutativity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table[i * n + j] != table[j * n + i]) {
        note_failure(chunk, index, w,
                     "commutativity fails at " + pts[i].str() + ", " +
                         pts[j].str());
        return;
      }
  // associativity over all triples
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int32_t ij = table[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        std::int32_t jk = table[j * n + k];
        if (table[(std::size_t)ij * n + k] != table[i * n + (std::size_t)jk]) {
          note_failure(chunk, index, w,
                       "associativity fails at " + pts[i].str() + ", " +
                           pts[j].str() + ", " + pts[k].str());
          return;
        }
      }
    }
  chunk.result.triples += (std::uint64_t)n * n * n;
}

}  // namespace

GroupLawScan scan_group_law(const Field& f, std::uint64_t curve_limit,
                            std::uint64_t seed) {
  std::uint64_t q = f.order();
  std::uint64_t total = q * q * q * q * q;
  std::vector<std::uint64_t> indices;
  if (curve_limit != 0 && curve_limit < total) {
    std::mt19937_64 rng(seed);
    indices.reserve(curve_limit);
    for (std::uint64_t i = 0; i < curve_limit; ++i)
      indices.push_back(rng() % total);
  } else {
    indices.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) indices.push_back(i);
  }

  unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                           8u));
  if (indices.size() < 64) workers = 1;
  std::vector<ScanChunk> chunks(workers);
  std::vector<std::thread> threads;
  std::size_t per = (indices.size() + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    std::size_t lo = t * per, hi = std::min(indices.size(), lo + per);
    threads.emplace_back([&, lo, hi, t] {
      for (std::size_t i = lo; i < hi; ++i) {
        WeierstrassCurve w = curve_from_index(f, indices[i]);
        chunks[t].result.curves++;
        scan_one_curve(chunks[t], indices[i], w);
      }
    });
  }
  for (auto& th : threads) th.join();

  GroupLawScan out;
  std::uint64_t best = ~0ull;
  for (const auto& c : chunks) {
    out.curves += c.result.curves;
    out.points += c.result.points;
    out.triples += c.result.triples;
    out.failures += c.result.failures;
    if (c.first_failure_index < best) {
      best = c.first_failure_index;
      out.first_failure = c.result.first_failure;
    }
  }
  return out;
}

}  // namespace wcurve
