#pragma once

/**
 * @file pg3.hpp
 * @brief The projective space PG(3,q): canonical points and planes, lines,
 *        incidence and deterministic enumeration.
 *
 * A point or plane is stored as its canonical representative: the rightmost
 * nonzero coordinate is 1. Enumeration order sorts representatives by the
 * integer key sum enc(x_i) q^i (last coordinate most significant). With
 * m the position of the rightmost nonzero coordinate, the rank of a
 * representative in that order is
 *
 *     (q^m - 1)/(q - 1) + sum_{i<m} enc(x_i) q^i,
 *
 * which lets ranks be computed without lookup tables.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twcubic/gf.hpp"

namespace twcubic {

using Vec4 = std::array<FieldElement, 4>;

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::uint64_t theta(std::uint64_t n, std::uint64_t q) {
  std::uint64_t s = 0, pw = 1;
  for (std::uint64_t i = 0; i <= n; ++i, pw *= q) s += pw;
  return s;
}

/// Canonical homogeneous 4-tuple; Tag distinguishes points from planes.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous() = default;

  /// Canonical scalar multiple of raw; throws on the zero vector.
  static Homogeneous normalize(const Vec4& raw) {
    int m = 3;
    while (m >= 0 && raw[m].is_zero()) --m;
    if (m < 0) throw GeometryError("zero vector has no projective representative");
    Homogeneous h;
    const FieldElement scale = raw[m].inv();
    for (int i = 0; i < 4; ++i) h.c_[i] = raw[i] * scale;
    return h;
  }

  /// Wraps a vector already in canonical form (unchecked).
  static Homogeneous from_canonical(const Vec4& c) {
    Homogeneous h;
    h.c_ = c;
    return h;
  }

  const Vec4& coords() const { return c_; }
  const FieldElement& operator[](std::size_t i) const { return c_[i]; }
  std::uint32_t q() const { return c_[0].order(); }

  std::uint64_t rank() const {
    const std::uint64_t q = this->q();
    int m = 3;
    while (c_[m].is_zero()) --m;
    std::uint64_t r = (m == 0) ? 0 : theta(static_cast<std::uint64_t>(m - 1), q);
    std::uint64_t pw = 1;
    for (int i = 0; i < m; ++i, pw *= q) r += c_[i].encoding() * pw;
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << c_[0] << ',' << c_[1] << ',' << c_[2] << ',' << c_[3] << ')';
    return os.str();
  }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.c_ == b.c_; }

 private:
  Vec4 c_{};
};

struct PointTag {};
struct PlaneTag {};
using ProjPoint = Homogeneous<PointTag>;
using ProjPlane = Homogeneous<PlaneTag>;

inline FieldElement dot(const Vec4& a, const Vec4& b) {
  FieldElement s = a[0] * b[0];
  for (int i = 1; i < 4; ++i) s += a[i] * b[i];
  return s;
}

inline bool incident(const ProjPoint& p, const ProjPlane& pi) { return dot(p.coords(), pi.coords()).is_zero(); }

namespace linalg {

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(std::vector<Vec4>& rows) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < 4 && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const FieldElement s = rows[r][col].inv();
    for (auto& x : rows[r]) x = x * s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const FieldElement f = rows[i][col];
      for (int k = 0; k < 4; ++k) rows[i][k] = rows[i][k] - f * rows[r][k];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(std::vector<Vec4> rows) { return rref(rows).size(); }

/// Basis of {x : row . x = 0 for every row}; rows must be non-empty.
inline std::vector<Vec4> null_space(std::vector<Vec4> rows) {
  const FieldElement zero = rows.at(0)[0].sibling(0);
  const FieldElement one = rows.at(0)[0].sibling(1);
  const auto pivots = rref(rows);
  std::vector<Vec4> basis;
  for (int free = 0; free < 4; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vec4 v{zero, zero, zero, zero};
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace linalg

/**
 * A line of PG(3,q), held as the sorted list of its q+1 points. The first
 * two entries form the canonical pair.
 */
class ProjLine {
 public:
  ProjLine() = default;
  explicit ProjLine(std::vector<ProjPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end(),
              [](const ProjPoint& a, const ProjPoint& b) { return a.rank() < b.rank(); });
  }

  const std::vector<ProjPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::pair<ProjPoint, ProjPoint> canonical_pair() const { return {points_[0], points_[1]}; }

  bool contains(const ProjPoint& p) const {
    return std::any_of(points_.begin(), points_.end(), [&](const ProjPoint& x) { return x == p; });
  }

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.points_ == b.points_; }

 private:
  std::vector<ProjPoint> points_;
};

inline ProjLine line_through(const ProjPoint& a, const ProjPoint& b) {
  if (a == b) throw GeometryError("line_through needs two distinct points");
  const Vec4& u = a.coords();
  const Vec4& v = b.coords();
  std::vector<ProjPoint> pts{a};
  for (std::uint32_t k = 0; k < a.q(); ++k) {
    const FieldElement lambda = u[0].sibling(k);
    Vec4 w;
    for (int i = 0; i < 4; ++i) w[i] = lambda * u[i] + v[i];
    pts.push_back(ProjPoint::normalize(w));
  }
  return ProjLine(std::move(pts));
}

/// The unique plane through three independent points.
inline ProjPlane plane_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  auto basis = linalg::null_space({a.coords(), b.coords(), c.coords()});
  if (basis.size() != 1) throw GeometryError("plane_through needs three non-collinear points");
  return ProjPlane::normalize(basis.front());
}

/// The q+1 planes containing a line, in rank order.
inline std::vector<ProjPlane> planes_through_line(const ProjLine& line) {
  const auto [a, b] = line.canonical_pair();
  auto basis = linalg::null_space({a.coords(), b.coords()});
  if (basis.size() != 2) throw GeometryError("degenerate line");
  const Vec4& u = basis[0];
  const Vec4& v = basis[1];
  std::vector<ProjPlane> planes{ProjPlane::normalize(u)};
  for (std::uint32_t k = 0; k < a.q(); ++k) {
    const FieldElement lambda = u[0].sibling(k);
    Vec4 w;
    for (int i = 0; i < 4; ++i) w[i] = lambda * u[i] + v[i];
    planes.push_back(ProjPlane::normalize(w));
  }
  std::sort(planes.begin(), planes.end(), [](const ProjPlane& x, const ProjPlane& y) { return x.rank() < y.rank(); });
  return planes;
}

/**
 * All canonical 4-tuples of PG(3,q) in rank order. Points and planes share
 * the same coordinate list; point(r) and plane(r) wrap entry r.
 */
class ProjectiveSpace {
 public:
  explicit ProjectiveSpace(Field field) : field_(std::move(field)) {
    const std::uint32_t q = field_.q();
    const auto el = field_.elements();
    coords_.reserve(theta(3, q));
    for (int m = 0; m < 4; ++m) {
      // rightmost nonzero coordinate at m, earlier coordinates free;
      // x_0 varies fastest so the key order is preserved
      std::uint64_t count = 1;
      for (int i = 0; i < m; ++i) count *= q;
      for (std::uint64_t code = 0; code < count; ++code) {
        Vec4 v{field_.zero(), field_.zero(), field_.zero(), field_.zero()};
        std::uint64_t c = code;
        for (int i = 0; i < m; ++i) {
          v[i] = el[c % q];
          c /= q;
        }
        v[m] = field_.one();
        coords_.push_back(v);
      }
    }
  }

  const Field& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  std::size_t size() const { return coords_.size(); }

  ProjPoint point(std::size_t rank) const { return ProjPoint::from_canonical(coords_.at(rank)); }
  ProjPlane plane(std::size_t rank) const { return ProjPlane::from_canonical(coords_.at(rank)); }

  std::vector<ProjPoint> points() const {
    std::vector<ProjPoint> out;
    out.reserve(size());
    for (const auto& c : coords_) out.push_back(ProjPoint::from_canonical(c));
    return out;
  }
  std::vector<ProjPlane> planes() const {
    std::vector<ProjPlane> out;
    out.reserve(size());
    for (const auto& c : coords_) out.push_back(ProjPlane::from_canonical(c));
    return out;
  }

  /// Ranks of the theta_{2,q} points on a plane, ascending.
  std::vector<std::uint32_t> points_on(const ProjPlane& plane) const { return solutions(plane.coords()); }

  /// Ranks of the theta_{2,q} planes through a point, ascending.
  std::vector<std::uint32_t> planes_through(const ProjPoint& point) const { return solutions(point.coords()); }

 private:
  // Canonical x with c . x = 0. With m the rightmost nonzero of c (c_m = 1),
  // the other three coordinates range over PG(2,q) and fix x_m.
  std::vector<std::uint32_t> solutions(const Vec4& c) const {
    int m = 3;
    while (c[m].is_zero()) --m;
    std::array<int, 3> free{};
    for (int i = 0, k = 0; i < 4; ++i)
      if (i != m) free[k++] = i;
    std::vector<std::uint32_t> out;
    out.reserve(theta(2, q()));
    // rank r of a canonical point within PG(3,q) restricted to its first three coordinates
    // enumerates PG(2,q): these are exactly coords_[0 .. theta(2,q))
    const std::size_t plane_count = theta(2, q());
    for (std::size_t r = 0; r < plane_count; ++r) {
      const Vec4& y = coords_[r];
      Vec4 x;
      FieldElement s = field_.zero();
      for (int k = 0; k < 3; ++k) {
        x[free[k]] = y[k];
        s += c[free[k]] * y[k];
      }
      x[m] = -s;
      out.push_back(static_cast<std::uint32_t>(ProjPoint::normalize(x).rank()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Field field_;
  std::vector<Vec4> coords_;
};

inline std::vector<ProjPoint> enumerate_points(const Field& f) { return ProjectiveSpace(f).points(); }
inline std::vector<ProjPlane> enumerate_planes(const Field& f) { return ProjectiveSpace(f).planes(); }

}  // namespace twcubic
