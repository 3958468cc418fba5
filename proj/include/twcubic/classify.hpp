#pragma once

/**
 * @file classify.hpp
 * @brief The five plane classes N_1..N_5 and five point classes M_1..M_5,
 *        computed from secant counts, osculating counts and chord types.
 *
 * Plane orbit indices (all q):
 *   N1 Γ-planes, N2 2_C, N3 3_C, N4 1_C\Γ, N5 0_C.
 * Point orbit indices, q ≢ 0 (mod 3):
 *   M1 C, M2 T, M3 3_Γ, M4 1_Γ, M5 0_Γ.
 * Point orbit indices, q ≡ 0 (mod 3):
 *   M1 C, M2 (q+1)_Γ, M3 TO, M4 RC, M5 IC.
 */

#include <array>
#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twcubic/cubic.hpp"
#include "twcubic/formulas.hpp"

namespace twcubic {

enum class PlaneClass : std::uint8_t { Gamma = 1, TwoSec = 2, ThreeSec = 3, OneSecNonGamma = 4, External = 5 };

enum class PointClass : std::uint8_t { OnCubic, T, TO, ThreeOsc, OneOsc, ZeroOsc, AllOsc, RC, IC };

inline const char* to_string(PlaneClass c) {
  switch (c) {
    case PlaneClass::Gamma: return "Gamma";
    case PlaneClass::TwoSec: return "2_C";
    case PlaneClass::ThreeSec: return "3_C";
    case PlaneClass::OneSecNonGamma: return "1_C\\Gamma";
    case PlaneClass::External: return "0_C";
  }
  return "?";
}

inline const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::OnCubic: return "C";
    case PointClass::T: return "T";
    case PointClass::TO: return "TO";
    case PointClass::ThreeOsc: return "3_Gamma";
    case PointClass::OneOsc: return "1_Gamma";
    case PointClass::ZeroOsc: return "0_Gamma";
    case PointClass::AllOsc: return "(q+1)_Gamma";
    case PointClass::RC: return "RC";
    case PointClass::IC: return "IC";
  }
  return "?";
}

inline int orbit_index(PlaneClass c) { return static_cast<int>(c); }

/// Orbit index 1..5 of a point class for the given ξ.
inline int orbit_index(PointClass c, int xi) {
  if (c == PointClass::OnCubic) return 1;
  if (xi != 0) {
    switch (c) {
      case PointClass::T: return 2;
      case PointClass::ThreeOsc: return 3;
      case PointClass::OneOsc: return 4;
      case PointClass::ZeroOsc: return 5;
      default: break;
    }
  } else {
    switch (c) {
      case PointClass::AllOsc: return 2;
      case PointClass::TO: return 3;
      case PointClass::RC: return 4;
      case PointClass::IC: return 5;
      default: break;
    }
  }
  throw std::invalid_argument(std::string("point class ") + to_string(c) + " does not occur for xi=" +
                              std::to_string(xi));
}

/// Raised when chord-based and osculating-count labels disagree.
class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * Field, space, cubic and chord inventory together with per-rank plane and
 * point labels. Construction runs the chord/osculating cross-check on every
 * point and throws ClassificationError on the first disagreement.
 */
class CubicGeometry {
 public:
  explicit CubicGeometry(Field field)
      : space_(std::move(field)), cubic_(space_), chords_(space_, cubic_) {
    const std::size_t n = space_.size();
    secants_.assign(n, 0);
    osc_.assign(n, 0);
    is_osc_plane_.assign(n, false);
    plane_class_.resize(n);
    point_class_.resize(n);

    for (const auto& pi : cubic_.osculating_planes()) {
      is_osc_plane_[pi.rank()] = true;
      for (auto r : space_.points_on(pi)) ++osc_[r];
    }
    for (std::size_t r = 0; r < n; ++r) {
      const ProjPlane pi = space_.plane(r);
      int d = 0;
      for (const auto& p : cubic_.points())
        if (incident(p, pi)) ++d;
      secants_[r] = static_cast<std::uint8_t>(d);
      if (is_osc_plane_[r]) {
        if (d != 1) throw ClassificationError("osculating plane " + pi.to_string() + " meets C in " +
                                              std::to_string(d) + " points");
        plane_class_[r] = PlaneClass::Gamma;
      } else {
        static constexpr PlaneClass by_d[4] = {PlaneClass::External, PlaneClass::OneSecNonGamma, PlaneClass::TwoSec,
                                               PlaneClass::ThreeSec};
        plane_class_[r] = by_d[d];
      }
    }
    for (std::size_t r = 0; r < n; ++r) point_class_[r] = label_point(r);
  }

  const Field& field() const { return space_.field(); }
  std::uint32_t q() const { return space_.q(); }
  int xi() const { return field().xi(); }
  const ProjectiveSpace& space() const { return space_; }
  const TwistedCubic& cubic() const { return cubic_; }
  const ChordInventory& chords() const { return chords_; }

  /// |π ∩ C| for the plane of this rank.
  int secant_count(std::size_t plane_rank) const { return secants_.at(plane_rank); }
  /// Number of osculating planes through the point of this rank (points of C included).
  int osc_count_of_rank(std::size_t point_rank) const { return static_cast<int>(osc_.at(point_rank)); }
  bool is_osculating(std::size_t plane_rank) const { return is_osc_plane_.at(plane_rank); }

  PlaneClass plane_class(std::size_t rank) const { return plane_class_.at(rank); }
  PointClass point_class(std::size_t rank) const { return point_class_.at(rank); }
  int plane_orbit(std::size_t rank) const { return orbit_index(plane_class_.at(rank)); }
  int point_orbit(std::size_t rank) const { return orbit_index(point_class_.at(rank), xi()); }

 private:
  PointClass label_point(std::size_t r) const {
    if (cubic_.contains_rank(r)) return PointClass::OnCubic;
    const ChordType chord = chords_.type_of_rank(r);
    const int osc = static_cast<int>(osc_[r]);
    const int qq = static_cast<int>(q());
    auto fail = [&](const std::string& what) -> ClassificationError {
      std::ostringstream os;
      os << "inconsistent labels at " << space_.point(r).to_string() << " (q=" << qq << ", xi=" << xi()
         << "): chord=" << to_string(chord) << ", osc=" << osc << ": " << what;
      return ClassificationError(os.str());
    };
    if (xi() == 0) {
      if (chord == ChordType::Tangent) {
        if (osc == qq + 1) return PointClass::AllOsc;
        if (osc == 1) return PointClass::TO;
        throw fail("tangent point must lie on 1 or q+1 osculating planes");
      }
      if (osc != 1) throw fail("chord point off the axis must lie on exactly one osculating plane");
      return chord == ChordType::RealChord ? PointClass::RC : PointClass::IC;
    }
    if (chord == ChordType::Tangent) {
      if (osc != 2) throw fail("T-point must lie on 2 osculating planes");
      return PointClass::T;
    }
    // 3_Γ and 0_Γ points sit on real chords for ξ=1 and on imaginary chords for ξ=-1; 1_Γ the other way round
    const ChordType three_zero = xi() == 1 ? ChordType::RealChord : ChordType::ImaginaryChord;
    switch (osc) {
      case 0:
      case 3:
        if (chord != three_zero) throw fail("0_Gamma/3_Gamma point on the wrong chord type");
        return osc == 0 ? PointClass::ZeroOsc : PointClass::ThreeOsc;
      case 1:
        if (chord == three_zero) throw fail("1_Gamma point on the wrong chord type");
        return PointClass::OneOsc;
      default:
        throw fail("osculating count outside {0,1,3}");
    }
  }

  ProjectiveSpace space_;
  TwistedCubic cubic_;
  ChordInventory chords_;
  std::vector<std::uint8_t> secants_;
  std::vector<std::uint32_t> osc_;
  std::vector<bool> is_osc_plane_;
  std::vector<PlaneClass> plane_class_;
  std::vector<PointClass> point_class_;
};

inline PlaneClass classify_plane(const CubicGeometry& g, const ProjPlane& pi) { return g.plane_class(pi.rank()); }

/// Number of t ∈ F_q^+ with Q ∈ π_osc(t); Q must be off C.
inline int osc_count(const CubicGeometry& g, const ProjPoint& q) {
  if (g.cubic().contains(q)) throw GeometryError("osc_count: point " + q.to_string() + " lies on the cubic");
  return g.osc_count_of_rank(q.rank());
}

inline PointClass classify_point(const CubicGeometry& g, const ProjPoint& q) { return g.point_class(q.rank()); }

struct OrbitPartition {
  int xi = 0;
  std::array<std::vector<std::uint32_t>, 5> planes;  // N_1..N_5 as ascending ranks
  std::array<std::vector<std::uint32_t>, 5> points;  // M_1..M_5

  std::array<std::int64_t, 5> plane_sizes() const { return sizes(planes); }
  std::array<std::int64_t, 5> point_sizes() const { return sizes(points); }

 private:
  static std::array<std::int64_t, 5> sizes(const std::array<std::vector<std::uint32_t>, 5>& v) {
    std::array<std::int64_t, 5> s{};
    for (int i = 0; i < 5; ++i) s[i] = static_cast<std::int64_t>(v[i].size());
    return s;
  }
};

/// Orbit partition of planes and points; throws std::logic_error when a size disagrees with the formula.
inline OrbitPartition partition_space(const CubicGeometry& g) {
  OrbitPartition part;
  part.xi = g.xi();
  for (std::size_t r = 0; r < g.space().size(); ++r) {
    part.planes[g.plane_orbit(r) - 1].push_back(static_cast<std::uint32_t>(r));
    part.points[g.point_orbit(r) - 1].push_back(static_cast<std::uint32_t>(r));
  }
  const auto expect = formulas::orbit_sizes(g.q());
  for (int i = 0; i < 5; ++i) {
    if (part.plane_sizes()[i] != expect.planes[i])
      throw std::logic_error("#N" + std::to_string(i + 1) + " = " + std::to_string(part.plane_sizes()[i]) +
                             ", expected " + std::to_string(expect.planes[i]) + " (q=" + std::to_string(g.q()) + ")");
    if (part.point_sizes()[i] != expect.points[i])
      throw std::logic_error("#M" + std::to_string(i + 1) + " = " + std::to_string(part.point_sizes()[i]) +
                             ", expected " + std::to_string(expect.points[i]) + " (q=" + std::to_string(g.q()) + ")");
  }
  return part;
}

}  // namespace twcubic
