#include <gtest/gtest.h>

#include <set>

#include "twcubic/cubic.hpp"

using namespace twcubic;

namespace {

struct Curve {
  explicit Curve(std::uint32_t q) : space(make_field_of_order(q)), cubic(space) {}
  ProjectiveSpace space;
  TwistedCubic cubic;
};

TEST(TwistedCubic, PointsAreTheParametrisation) {
  Curve s(7);
  const Field& f = s.space.field();
  ASSERT_EQ(s.cubic.size(), 8u);
  for (const auto& t : f.elements()) {
    const ProjPoint p = s.cubic.point(Param::finite(t));
    EXPECT_EQ(p, ProjPoint::normalize({t * t * t, t * t, t, f.one()}));
    EXPECT_TRUE(s.cubic.contains(p));
  }
  EXPECT_EQ(s.cubic.point(Param::infinity(f)), ProjPoint::normalize({f.one(), f.zero(), f.zero(), f.zero()}));
}

TEST(TwistedCubic, NoFourPointsCoplanar) {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
    Curve s(q);
    const auto& pts = s.cubic.points();
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        for (std::size_t c = b + 1; c < pts.size(); ++c)
          for (std::size_t d = c + 1; d < pts.size(); ++d)
            ASSERT_EQ(linalg::rank({pts[a].coords(), pts[b].coords(), pts[c].coords(), pts[d].coords()}), 4u);
  }
}

TEST(TwistedCubic, PlaneThroughParamsMatchesSpan) {
  Curve s(7);
  const auto& params = s.cubic.params();
  for (std::size_t a = 0; a < params.size(); ++a)
    for (std::size_t b = a + 1; b < params.size(); ++b)
      for (std::size_t c = b + 1; c < params.size(); ++c)
        ASSERT_EQ(s.cubic.plane_through_params(params[a], params[b], params[c]),
                  plane_through(s.cubic.point(params[a]), s.cubic.point(params[b]), s.cubic.point(params[c])));
  EXPECT_THROW(s.cubic.plane_through_params(params[0], params[0], params[1]), GeometryError);
}

TEST(TwistedCubic, OsculatingPlaneMeetsCurveOnlyAtItsPoint) {
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    Curve s(q);
    for (const auto& t : s.cubic.params()) {
      const ProjPlane osc = s.cubic.osculating_plane(t);
      int meets = 0;
      for (const auto& p : s.cubic.points()) meets += incident(p, osc);
      EXPECT_EQ(meets, 1) << "q=" << q << " t=" << t.to_string();
      EXPECT_TRUE(incident(s.cubic.point(t), osc));
    }
  }
  Curve s(5);
  const Field& f = s.space.field();
  EXPECT_EQ(s.cubic.osculating_plane(Param::infinity(f)), ProjPlane::normalize({f.zero(), f.zero(), f.zero(), f.one()}));
  // t = 1 over GF(5): (1, -3, 3, -1) = (1, 2, 3, 4)
  EXPECT_EQ(s.cubic.osculating_plane(Param::finite(f.one())).to_string(),
            ProjPlane::normalize({f.element(1), f.element(2), f.element(3), f.element(4)}).to_string());
}

TEST(TwistedCubic, TangentAtOneOverGf5) {
  Curve s(5);
  const Field& f = s.space.field();
  const ProjLine tan = s.cubic.tangent_line(Param::finite(f.one()));
  // P(1) = (1,1,1,1), derivative (3t^2, 2t, 1, 0) = (3,2,1,0)
  EXPECT_EQ(tan, line_through(ProjPoint::normalize({f.one(), f.one(), f.one(), f.one()}),
                              ProjPoint::normalize({f.element(3), f.element(2), f.element(1), f.zero()})));
  const ProjLine at_inf = s.cubic.tangent_line(Param::infinity(f));
  EXPECT_TRUE(at_inf.contains(ProjPoint::normalize({f.zero(), f.one(), f.zero(), f.zero()})));
}

TEST(TwistedCubic, OsculatingAxisOnlyInCharacteristicThree) {
  for (std::uint32_t q : {5u, 7u, 8u}) EXPECT_FALSE(Curve(q).cubic.osculating_axis().has_value()) << q;
  for (std::uint32_t q : {3u, 9u}) {
    Curve s(q);
    const auto axis = s.cubic.osculating_axis();
    ASSERT_TRUE(axis.has_value());
    for (const auto& pi : s.cubic.osculating_planes())
      for (const auto& p : axis->points()) EXPECT_TRUE(incident(p, pi));
  }
}

TEST(Chords, QuadraticWithRootsGivesTheRealChordOrTangent) {
  Curve s(7);
  const Field& f = s.space.field();
  for (const auto& a : f.elements())
    for (const auto& b : f.elements()) {
      const ProjLine line = chord_of_quadratic(f.one(), -(a + b), a * b);
      if (a == b)
        EXPECT_EQ(line, s.cubic.tangent_line(Param::finite(a)));
      else
        EXPECT_EQ(line, line_through(s.cubic.point(Param::finite(a)), s.cubic.point(Param::finite(b))));
    }
  // b t + c has its second root at infinity
  for (const auto& r : f.elements())
    EXPECT_EQ(chord_of_quadratic(f.zero(), f.one(), -r),
              line_through(s.cubic.point(Param::finite(r)), s.cubic.point(Param::infinity(f))));
}

TEST(Chords, InventoryCountsAndPartition) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
    Curve s(q);
    const ChordInventory inv(s.space, s.cubic);
    EXPECT_EQ(inv.real_count(), std::size_t{q} * (q + 1) / 2);
    EXPECT_EQ(inv.tangent_count(), q + 1u);
    EXPECT_EQ(inv.imaginary_count(), std::size_t{q} * (q - 1) / 2);
    // off-curve points: (q-1) per real chord, q per tangent, q+1 per imaginary chord, disjointly
    const std::size_t covered = inv.real_count() * (q - 1) + inv.tangent_count() * q + inv.imaginary_count() * (q + 1);
    EXPECT_EQ(covered, s.space.size() - (q + 1));
    for (const auto& c : inv.chords()) {
      int on_curve = 0;
      for (const auto& p : c.line.points()) on_curve += s.cubic.contains(p);
      const int want = c.type == ChordType::RealChord ? 2 : c.type == ChordType::Tangent ? 1 : 0;
      EXPECT_EQ(on_curve, want);
    }
    std::vector<int> hits(s.space.size(), 0);
    for (const auto& c : inv.chords())
      for (const auto& p : c.line.points())
        if (!s.cubic.contains(p)) ++hits[p.rank()];
    for (std::size_t r = 0; r < s.space.size(); ++r)
      ASSERT_EQ(hits[r], s.cubic.contains_rank(r) ? 0 : 1) << "q=" << q << " point " << s.space.point(r).to_string();
  }
}

TEST(Chords, ImaginaryChordsComeFromIrreducibleQuadratics) {
  Curve s(5);
  const Field& f = s.space.field();
  const ChordInventory inv(s.space, s.cubic);
  std::set<std::vector<std::uint64_t>> from_inventory, built;
  for (const auto& c : inv.chords()) {
    if (c.type != ChordType::ImaginaryChord) continue;
    std::vector<std::uint64_t> key;
    for (const auto& p : c.line.points()) key.push_back(p.rank());
    from_inventory.insert(key);
  }
  for (const auto& b : f.elements())
    for (const auto& c : f.elements()) {
      bool root = false;
      for (const auto& t : f.elements()) root = root || (t * t + b * t + c).is_zero();
      if (root) continue;
      const ProjLine l = chord_of_quadratic(f.one(), b, c);
      std::vector<std::uint64_t> key;
      for (const auto& p : l.points()) key.push_back(p.rank());
      built.insert(key);
    }
  EXPECT_EQ(from_inventory, built);
  EXPECT_EQ(built.size(), 10u);
}

// Lines through an imaginary-chord point that meet neither C nor any real chord or tangent.
TEST(Chords, AvoidingLinesPerPointDependOnXi) {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
    Curve s(q);
    const ChordInventory inv(s.space, s.cubic);
    const std::size_t want = s.space.field().xi() == 1 ? 2 : 1;
    std::vector<std::size_t> ic;
    for (std::size_t r = 0; r < s.space.size(); ++r)
      if (!s.cubic.contains_rank(r) && inv.type_of_rank(r) == ChordType::ImaginaryChord) ic.push_back(r);
    for (std::size_t a : ic) {
      const ProjPoint qa = s.space.point(a);
      std::set<std::vector<std::uint64_t>> lines;
      for (std::size_t b : ic) {
        if (b == a) continue;
        const ProjLine l = line_through(qa, s.space.point(b));
        std::vector<std::uint64_t> key;
        bool clear = true;
        for (const auto& p : l.points()) {
          key.push_back(p.rank());
          clear = clear && !s.cubic.contains_rank(p.rank()) && inv.type_of_rank(p.rank()) == ChordType::ImaginaryChord;
        }
        if (clear) lines.insert(key);
      }
      ASSERT_EQ(lines.size(), want) << "q=" << q << " Q=" << qa.to_string();
    }
  }
}

}  // namespace
