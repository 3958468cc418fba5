#pragma once

/**
 * @file cubic.hpp
 * @brief The twisted cubic C = {P(t) : t in F_q ∪ {∞}}, its osculating
 *        planes, tangents and the chord partition of the points off C.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twcubic/pg3.hpp"

namespace twcubic {

/// A parameter in F_q ∪ {∞}. Finite values order by encoding; ∞ comes last.
class Param {
 public:
  Param() = default;
  static Param finite(const FieldElement& t) { return Param(t, t.encoding()); }
  static Param infinity(const Field& f) { return Param(f.zero(), f.q()); }

  bool is_infinity() const { return index_ == value_.order(); }
  const FieldElement& value() const {
    if (is_infinity()) throw GeometryError("the parameter ∞ has no field value");
    return value_;
  }
  /// Position in parameter order: encoding for finite values, q for ∞.
  std::uint32_t index() const { return index_; }

  std::string to_string() const { return is_infinity() ? "inf" : std::to_string(index_); }

  friend bool operator==(const Param& a, const Param& b) { return a.index_ == b.index_; }
  friend auto operator<=>(const Param& a, const Param& b) { return a.index_ <=> b.index_; }

 private:
  Param(FieldElement v, std::uint32_t index) : value_(v), index_(index) {}
  FieldElement value_;
  std::uint32_t index_ = 0;
};

class TwistedCubic {
 public:
  explicit TwistedCubic(const ProjectiveSpace& space)
      : field_(space.field()), param_by_rank_(space.size(), -1) {
    for (const auto& t : field_.elements()) params_.push_back(Param::finite(t));
    params_.push_back(Param::infinity(field_));
    for (const auto& t : params_) {
      points_.push_back(point(t));
      param_by_rank_[points_.back().rank()] = static_cast<std::int32_t>(t.index());
      osc_.push_back(osculating_plane(t));
    }
    if (q() <= 13) check_no_four_coplanar();
  }

  const Field& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  std::size_t size() const { return points_.size(); }

  /// F_q in encoding order, then ∞.
  const std::vector<Param>& params() const { return params_; }
  const Param& param(std::size_t index) const { return params_.at(index); }
  /// Curve points in parameter order.
  const std::vector<ProjPoint>& points() const { return points_; }
  /// Osculating planes in parameter order.
  const std::vector<ProjPlane>& osculating_planes() const { return osc_; }

  /// P(t) = (t^3, t^2, t, 1); P(∞) = (1, 0, 0, 0).
  ProjPoint point(const Param& t) const {
    const auto z = field_.zero(), o = field_.one();
    if (t.is_infinity()) return ProjPoint::from_canonical({o, z, z, z});
    const auto& x = t.value();
    return ProjPoint::from_canonical({x * x * x, x * x, x, o});
  }

  std::optional<Param> param_of(const ProjPoint& p) const {
    const auto idx = param_by_rank_.at(p.rank());
    if (idx < 0) return std::nullopt;
    return params_[static_cast<std::size_t>(idx)];
  }
  bool contains(const ProjPoint& p) const { return param_by_rank_.at(p.rank()) >= 0; }
  bool contains_rank(std::size_t rank) const { return param_by_rank_.at(rank) >= 0; }
  /// Parameter index of the curve point with this rank, or -1.
  std::int32_t param_index_of_rank(std::size_t rank) const { return param_by_rank_.at(rank); }

  /**
   * Plane through P(t1), P(t2), P(t3). For finite parameters this is
   * (1, -s1, s2, -s3) with s_k the elementary symmetric functions.
   */
  ProjPlane plane_through_params(const Param& t1, const Param& t2, const Param& t3) const {
    if (t1 == t2 || t1 == t3 || t2 == t3) throw GeometryError("plane_through_params needs distinct parameters");
    if (t1.is_infinity() || t2.is_infinity() || t3.is_infinity())
      return plane_through(point(t1), point(t2), point(t3));
    const auto &a = t1.value(), &b = t2.value(), &c = t3.value();
    return ProjPlane::normalize({field_.one(), -(a + b + c), a * b + a * c + b * c, -(a * b * c)});
  }

  /// (1, -3t, 3t^2, -t^3); (0, 0, 0, 1) at ∞.
  ProjPlane osculating_plane(const Param& t) const {
    const auto z = field_.zero(), o = field_.one();
    if (t.is_infinity()) return ProjPlane::normalize({z, z, z, o});
    const auto& x = t.value();
    const auto three = field_.from_int(3);
    return ProjPlane::normalize({o, -(three * x), three * x * x, -(x * x * x)});
  }

  /**
   * Line through P(t) in the direction of the formal derivative
   * (3t^2, 2t, 1, 0); at ∞ the span of (1,0,0,0) and (0,1,0,0). The result
   * is checked to meet C only in P(t) and to lie in the osculating plane.
   */
  ProjLine tangent_line(const Param& t) const {
    const auto z = field_.zero(), o = field_.one();
    ProjLine line;
    if (t.is_infinity()) {
      line = line_through(ProjPoint::from_canonical({o, z, z, z}), ProjPoint::from_canonical({z, o, z, z}));
    } else {
      const auto& x = t.value();
      const Vec4 dir{field_.from_int(3) * x * x, field_.from_int(2) * x, o, z};
      line = line_through(point(t), ProjPoint::normalize(dir));
    }
    const ProjPlane osc = osculating_plane(t);
    std::size_t on_curve = 0;
    for (const auto& p : line.points()) {
      if (!incident(p, osc))
        throw std::logic_error("tangent at t=" + t.to_string() + " leaves its osculating plane at " + p.to_string());
      if (contains(p)) {
        ++on_curve;
        if (!(p == point(t)))
          throw std::logic_error("tangent at t=" + t.to_string() + " meets the cubic again at " + p.to_string());
      }
    }
    if (on_curve != 1) throw std::logic_error("tangent at t=" + t.to_string() + " misses P(t)");
    return line;
  }

  /// Common line of all osculating planes when q = 0 mod 3, else nullopt.
  std::optional<ProjLine> osculating_axis() const {
    std::vector<Vec4> rows;
    for (const auto& p : osc_) rows.push_back(p.coords());
    auto basis = linalg::null_space(rows);
    if (basis.size() != 2) return std::nullopt;
    return line_through(ProjPoint::normalize(basis[0]), ProjPoint::normalize(basis[1]));
  }

 private:
  void check_no_four_coplanar() const {
    const std::size_t n = points_.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d)
            if (linalg::rank({points_[a].coords(), points_[b].coords(), points_[c].coords(), points_[d].coords()}) != 4)
              throw std::logic_error("four coplanar points on the cubic");
  }

  Field field_;
  std::vector<Param> params_;
  std::vector<ProjPoint> points_;
  std::vector<ProjPlane> osc_;
  std::vector<std::int32_t> param_by_rank_;
};

enum class ChordType { RealChord, Tangent, ImaginaryChord };

inline const char* to_string(ChordType t) {
  switch (t) {
    case ChordType::RealChord: return "real chord";
    case ChordType::Tangent: return "tangent";
    case ChordType::ImaginaryChord: return "imaginary chord";
  }
  return "?";
}

struct Chord {
  ChordType type;
  ProjLine line;
  // curve parameter indices: (i, j) for a real chord, (i, i) for a tangent, (-1, -1) otherwise
  std::int32_t first = -1;
  std::int32_t second = -1;
};

/**
 * The chord of C attached to the binary quadratic a t^2 + b t + c: the line
 * a x0 + b x1 + c x2 = 0 = a x1 + b x2 + c x3. Its roots (in F_q ∪ {∞} or
 * in GF(q^2)) are the parameters of the two curve points it joins, so
 * irreducible quadratics give exactly the imaginary chords.
 */
inline ProjLine chord_of_quadratic(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  const FieldElement z = a.sibling(0);
  auto basis = linalg::null_space({Vec4{a, b, c, z}, Vec4{z, a, b, c}});
  if (basis.size() != 2) throw GeometryError("chord_of_quadratic needs a nonzero form");
  return line_through(ProjPoint::normalize(basis[0]), ProjPoint::normalize(basis[1]));
}

/**
 * Every chord of C and, for each point off C, the chord it lies on.
 *
 * Imaginary chords are built from irreducible quadratics (see
 * chord_of_quadratic), so no quadratic extension is needed. Laying the
 * chords down asserts that no two meet off C and that every point off C
 * is covered.
 */
class ChordInventory {
 public:
  ChordInventory(const ProjectiveSpace& space, const TwistedCubic& cubic) : chord_of_(space.size(), -1) {
    const std::uint32_t q = space.q();
    const std::size_t n = cubic.size();
    auto lay = [&](Chord chord) {
      const auto id = static_cast<std::int32_t>(chords_.size());
      for (const auto& p : chord.line.points()) {
        const auto r = p.rank();
        if (cubic.contains_rank(r)) continue;
        if (chord_of_[r] >= 0)
          throw std::logic_error("two chords meet off the cubic at " + p.to_string());
        chord_of_[r] = id;
      }
      chords_.push_back(std::move(chord));
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        lay({ChordType::RealChord, line_through(cubic.points()[i], cubic.points()[j]), static_cast<std::int32_t>(i),
             static_cast<std::int32_t>(j)});
    real_ = chords_.size();
    for (std::size_t i = 0; i < n; ++i)
      lay({ChordType::Tangent, cubic.tangent_line(cubic.param(i)), static_cast<std::int32_t>(i),
           static_cast<std::int32_t>(i)});
    tangents_ = chords_.size() - real_;

    // Imaginary chords: t^2 + b t + c irreducible over F_q.
    const auto el = cubic.field().elements();
    const auto o = cubic.field().one();
    for (const auto& b : el) {
      for (const auto& c : el) {
        bool has_root = false;
        for (const auto& t : el)
          if ((t * t + b * t + c).is_zero()) {
            has_root = true;
            break;
          }
        if (!has_root) lay({ChordType::ImaginaryChord, chord_of_quadratic(o, b, c), -1, -1});
      }
    }
    imaginary_ = chords_.size() - real_ - tangents_;

    const std::uint64_t expect_real = std::uint64_t{n} * (n - 1) / 2;
    const std::uint64_t expect_imag = std::uint64_t{q} * (q - 1) / 2;
    if (real_ != expect_real || tangents_ != n || imaginary_ != expect_imag)
      throw std::logic_error("chord census (" + std::to_string(real_) + "," + std::to_string(tangents_) + "," +
                             std::to_string(imaginary_) + ") disagrees with the expected counts");
    for (std::size_t r = 0; r < space.size(); ++r)
      if (!cubic.contains_rank(r) && chord_of_[r] < 0)
        throw std::logic_error("point " + space.point(r).to_string() + " lies on no chord");
  }

  std::size_t real_count() const { return real_; }
  std::size_t tangent_count() const { return tangents_; }
  std::size_t imaginary_count() const { return imaginary_; }

  const std::vector<Chord>& chords() const { return chords_; }

  /// Chord index for an off-curve rank, -1 for points of C.
  std::int32_t chord_index_of_rank(std::size_t rank) const { return chord_of_.at(rank); }

  const Chord& chord_of(const ProjPoint& q) const {
    const auto id = chord_of_.at(q.rank());
    if (id < 0) throw GeometryError("point " + q.to_string() + " lies on the cubic");
    return chords_[static_cast<std::size_t>(id)];
  }

  ChordType type_of_rank(std::size_t rank) const {
    const auto id = chord_of_.at(rank);
    if (id < 0) throw GeometryError("point lies on the cubic");
    return chords_[static_cast<std::size_t>(id)].type;
  }

 private:
  std::vector<Chord> chords_;
  std::vector<std::int32_t> chord_of_;
  std::size_t real_ = 0, tangents_ = 0, imaginary_ = 0;
};

/// Chord type of an off-curve point together with the chord itself.
inline std::pair<ChordType, ProjLine> classify_chord_of(const ChordInventory& chords, const ProjPoint& q) {
  const Chord& c = chords.chord_of(q);
  return {c.type, c.line};
}

}  // namespace twcubic
