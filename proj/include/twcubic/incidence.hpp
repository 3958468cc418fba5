#pragma once

/**
 * @file incidence.hpp
 * @brief The 25 submatrices I_ij of the point-plane incidence matrix of
 *        PG(3,q): their parameters k_ij / r_ij and the counting identities
 *        they satisfy.
 *
 * Rows of I_ij are the planes of N_i, columns the points of M_j, both in
 * ascending rank order. Counts are accumulated by streaming over planes;
 * explicit 0/1 matrices are only built for dumps and transpose checks.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twcubic/check.hpp"
#include "twcubic/classify.hpp"
#include "twcubic/formulas.hpp"
#include "twcubic/parallel.hpp"

namespace twcubic {

struct SubmatrixStats {
  int i = 0;  // plane orbit, 1..5
  int j = 0;  // point orbit, 1..5
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t k_min = 0, k_max = 0;
  std::int64_t r_min = 0, r_max = 0;
  std::string witness;  // first non-constant row or column, if any

  bool tactical() const { return k_min == k_max && r_min == r_max; }
  std::int64_t k() const { return k_min; }
  std::int64_t r() const { return r_min; }
};

struct IncidenceReport {
  std::uint32_t q = 0;
  int xi = 0;
  formulas::OrbitSizes sizes;
  std::array<std::array<SubmatrixStats, 5>, 5> grid{};
  // per plane rank: number of points of M_1..M_5 on it
  std::vector<std::array<std::uint32_t, 5>> points_by_orbit;
  // per point rank: number of planes of N_1..N_5 through it
  std::vector<std::array<std::uint32_t, 5>> planes_by_orbit;

  const SubmatrixStats& cell(int i, int j) const { return grid.at(i - 1).at(j - 1); }

  /// n_d(A): number of d_C-planes through the point of this rank.
  std::int64_t n_of_point(int d, std::size_t rank) const {
    const auto& c = planes_by_orbit.at(rank);
    switch (d) {
      case 0: return c[4];
      case 1: return std::int64_t{c[0]} + c[3];
      case 2: return c[1];
      case 3: return c[2];
    }
    throw std::out_of_range("d must be 0..3");
  }

  /// n_{d,•} for the point orbit M_j, read off the r-parameters.
  std::int64_t n_of_orbit(int d, int j) const {
    switch (d) {
      case 0: return cell(5, j).r();
      case 1: return cell(1, j).r() + cell(4, j).r();
      case 2: return cell(2, j).r();
      case 3: return cell(3, j).r();
    }
    throw std::out_of_range("d must be 0..3");
  }
};

/// Streams over all planes and fills the 5×5 grid; `threads` splits the plane range.
inline IncidenceReport full_report(const CubicGeometry& g, const OrbitPartition& part, unsigned threads = 1) {
  const auto& space = g.space();
  const std::size_t n = space.size();
  IncidenceReport rep;
  rep.q = g.q();
  rep.xi = g.xi();
  rep.sizes.planes = part.plane_sizes();
  rep.sizes.points = part.point_sizes();
  rep.points_by_orbit.assign(n, {});
  rep.planes_by_orbit.assign(n, {});

  threads = std::max(1u, threads);
  std::vector<std::vector<std::array<std::uint32_t, 5>>> cols(threads);
  parallel_ranges(n, threads, [&](std::size_t b, std::size_t e, unsigned w) {
    auto& col = cols[w];
    col.assign(n, {});
    for (std::size_t r = b; r < e; ++r) {
      const int i = g.plane_orbit(r) - 1;
      auto& row = rep.points_by_orbit[r];
      for (auto pt : space.points_on(space.plane(r))) {
        ++row[g.point_orbit(pt) - 1];
        ++col[pt][i];
      }
    }
  });
  for (const auto& col : cols)
    for (std::size_t r = 0; r < col.size(); ++r)
      for (int i = 0; i < 5; ++i) rep.planes_by_orbit[r][i] += col[r][i];

  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      SubmatrixStats s;
      s.i = i + 1;
      s.j = j + 1;
      s.rows = static_cast<std::int64_t>(part.planes[i].size());
      s.cols = static_cast<std::int64_t>(part.points[j].size());
      bool first = true;
      for (auto r : part.planes[i]) {
        const std::int64_t v = rep.points_by_orbit[r][j];
        if (first) s.k_min = s.k_max = v;
        if (!first && v != s.k_min && s.witness.empty())
          s.witness = "plane " + space.plane(r).to_string() + " has " + std::to_string(v) + " points of M" +
                      std::to_string(j + 1) + ", another has " + std::to_string(s.k_min);
        s.k_min = std::min(s.k_min, v);
        s.k_max = std::max(s.k_max, v);
        first = false;
      }
      first = true;
      for (auto r : part.points[j]) {
        const std::int64_t v = rep.planes_by_orbit[r][i];
        if (first) s.r_min = s.r_max = v;
        if (!first && v != s.r_min && s.witness.empty())
          s.witness = "point " + space.point(r).to_string() + " lies on " + std::to_string(v) + " planes of N" +
                      std::to_string(i + 1) + ", another on " + std::to_string(s.r_min);
        s.r_min = std::min(s.r_min, v);
        s.r_max = std::max(s.r_max, v);
        first = false;
      }
      rep.grid[i][j] = s;
    }
  }
  return rep;
}

/// Stats of I_ij (1-based); throws std::logic_error with a witness if I_ij is not tactical.
inline SubmatrixStats submatrix_stats(const IncidenceReport& rep, int i, int j) {
  if (i < 1 || i > 5 || j < 1 || j > 5) throw std::out_of_range("submatrix indices must be in 1..5");
  const auto& s = rep.cell(i, j);
  if (!s.tactical())
    throw std::logic_error("I_" + std::to_string(i) + std::to_string(j) + " is not tactical: " + s.witness);
  return s;
}

namespace detail {

// Collects mismatches for one named check, keeping the first few as witness.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (bad_ < 4) os_ << (bad_ ? "; " : "") << what;
    ++bad_;
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    expect(false, os.str());
  }
  CheckResult result() const {
    CheckResult c{name_, bad_ == 0, os_.str()};
    if (bad_ > 4) c.witness += "; ... (" + std::to_string(bad_) + " mismatches)";
    return c;
  }

 private:
  std::string name_;
  std::ostringstream os_;
  int bad_ = 0;
};

inline std::string cell_name(const char* what, int i, int j) {
  return std::string(what) + std::to_string(i) + std::to_string(j);
}

}  // namespace detail

/// Orbit sizes, tactical property, tabulated values and the k·#N = r·#M and sum identities.
inline std::vector<CheckResult> verify_tables(const IncidenceReport& rep) {
  const std::int64_t q = rep.q;
  std::vector<CheckResult> out;
  const auto expect_sizes = formulas::orbit_sizes(q);
  detail::Tally sizes("orbit sizes");
  for (int i = 0; i < 5; ++i) {
    sizes.expect_eq(rep.sizes.planes[i], expect_sizes.planes[i], "#N" + std::to_string(i + 1));
    sizes.expect_eq(rep.sizes.points[i], expect_sizes.points[i], "#M" + std::to_string(i + 1));
  }
  out.push_back(sizes.result());

  detail::Tally tactical("every I_ij is a tactical configuration");
  for (const auto& row : rep.grid)
    for (const auto& s : row) tactical.expect(s.tactical(), detail::cell_name("I", s.i, s.j) + ": " + s.witness);
  out.push_back(tactical.result());

  const auto table = formulas::expected_table(q);
  detail::Tally values(std::string("tabulated values k_ij, r_ij"));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      values.expect_eq(rep.cell(i, j).k(), table[i - 1][j - 1].k, detail::cell_name("k", i, j));
      values.expect_eq(rep.cell(i, j).r(), table[i - 1][j - 1].r, detail::cell_name("r", i, j));
    }
  out.push_back(values.result());

  detail::Tally ones("k_ij #N_i = r_ij #M_j");
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      ones.expect_eq(rep.cell(i, j).k() * rep.sizes.planes[i - 1], rep.cell(i, j).r() * rep.sizes.points[j - 1],
                     detail::cell_name("cell ", i, j));
  out.push_back(ones.result());

  const std::int64_t theta2 = q * q + q + 1;
  // a point of M_j lies on q^2+q+1 planes in total, a plane of N_i contains q^2+q+1 points
  detail::Tally sums("sum_i r_ij = sum_j k_ij = q^2+q+1");
  for (int a = 1; a <= 5; ++a) {
    std::int64_t rs = 0, ks = 0;
    for (int b = 1; b <= 5; ++b) {
      rs += rep.cell(b, a).r();
      ks += rep.cell(a, b).k();
    }
    sums.expect_eq(rs, theta2, "sum_i r_i" + std::to_string(a));
    sums.expect_eq(ks, theta2, "sum_j k_" + std::to_string(a) + "j");
  }
  out.push_back(sums.result());

  detail::Tally global("every point on q^2+q+1 planes, every plane through q^2+q+1 points");
  for (std::size_t r = 0; r < rep.points_by_orbit.size(); ++r) {
    std::int64_t a = 0, b = 0;
    for (int x = 0; x < 5; ++x) {
      a += rep.points_by_orbit[r][x];
      b += rep.planes_by_orbit[r][x];
    }
    global.expect_eq(a, theta2, "plane rank " + std::to_string(r));
    global.expect_eq(b, theta2, "point rank " + std::to_string(r));
  }
  out.push_back(global.result());
  return out;
}

/// The counting lemmas and propositions on d_C-planes through points and chords.
inline std::vector<CheckResult> verify_counting_identities(const CubicGeometry& g, const IncidenceReport& rep) {
  const std::int64_t q = g.q();
  const auto& space = g.space();
  std::vector<CheckResult> out;

  detail::Tally real("real chord: q-1 3_C-planes and two 2_C-planes through it");
  detail::Tally imag("imaginary chord: all q+1 planes through it are 1_C\\Gamma-planes");
  for (const auto& chord : g.chords().chords()) {
    if (chord.type == ChordType::Tangent) continue;
    int by_class[6] = {};
    for (const auto& pi : planes_through_line(chord.line)) ++by_class[g.plane_orbit(pi.rank())];
    const std::string at = "chord through " + chord.line.points()[0].to_string() + "," +
                           chord.line.points()[1].to_string();
    if (chord.type == ChordType::RealChord) {
      real.expect_eq(by_class[3], q - 1, at + " 3_C");
      real.expect_eq(by_class[2], 2, at + " 2_C");
    } else {
      imag.expect_eq(by_class[4], q + 1, at);
    }
  }
  out.push_back(real.result());

  const auto totals = formulas::plane_totals(q);
  std::array<std::int64_t, 4> counted{};
  for (std::size_t r = 0; r < space.size(); ++r) ++counted[g.secant_count(r)];
  detail::Tally tot("totals n_d^Sigma of d_C-planes");
  for (int d = 0; d < 4; ++d) tot.expect_eq(counted[d], totals[d], "d=" + std::to_string(d));
  out.push_back(tot.result());

  // sum over off-curve orbits of #M_j n_{d,j} counts incidences of d_C-planes with points off C
  detail::Tally raw("off-curve incidences: sum_j #M_j n_{d,j} = n_d^Sigma (q^2+q+1-d)");
  for (int d = 0; d < 4; ++d) {
    std::int64_t s = 0;
    for (int j = 2; j <= 5; ++j) s += rep.sizes.points[j - 1] * rep.n_of_orbit(d, j);
    raw.expect_eq(s, totals[d] * (q * q + q + 1 - d), "d=" + std::to_string(d));
  }
  out.push_back(raw.result());

  if (rep.xi != 0) {
    // 6 (n_T + (q-1)/3 n_0G + (q-1)/2 n_1G + (q-1)/6 n_3G)
    detail::Tally w("weighted sum over T, 0_Gamma, 1_Gamma, 3_Gamma points (xi != 0)");
    const std::array<std::int64_t, 4> rhs6 = {2 * (q * q * q - 1), 3 * (q * q * q + q + 2), 6 * (q * q + q - 1),
                                              (q - 1) * (q - 1) * (q + 2)};
    for (int d = 0; d < 4; ++d) {
      const std::int64_t lhs6 = 6 * rep.n_of_orbit(d, 2) + 2 * (q - 1) * rep.n_of_orbit(d, 5) +
                                3 * (q - 1) * rep.n_of_orbit(d, 4) + (q - 1) * rep.n_of_orbit(d, 3);
      w.expect_eq(lhs6, rhs6[d], "6x(d=" + std::to_string(d) + ")");
    }
    out.push_back(w.result());
  } else {
    // 2 ((q-1) n_TO + n_(q+1)G + q(q-1)/2 (n_RC + n_IC))
    detail::Tally w("weighted sum over TO, (q+1)_Gamma, RC, IC points (xi = 0)");
    const std::array<std::int64_t, 4> rhs2 = {formulas::exact(2 * q * (q * q * q - 1), 3), q * (q * q * q + q + 2),
                                              2 * q * (q * q + q - 1),
                                              formulas::exact(q * (q - 1) * (q - 1) * (q + 2), 3)};
    for (int d = 0; d < 4; ++d) {
      const std::int64_t lhs2 = 2 * (q - 1) * rep.n_of_orbit(d, 3) + 2 * rep.n_of_orbit(d, 2) +
                                q * (q - 1) * (rep.n_of_orbit(d, 4) + rep.n_of_orbit(d, 5));
      w.expect_eq(lhs2, rhs2[d], "2x(d=" + std::to_string(d) + ")");
    }
    out.push_back(w.result());
  }

  detail::Tally all("sum_d n_d(A) = q^2+q+1 for every point");
  detail::Tally off_rc("n_2(A)+3n_3(A) = C(q+1,2) for A off C and off real chords");
  detail::Tally on_rc("n_2(A)+3n_3(A) = (q^2+3q)/2 for A on a real chord");
  detail::Tally sq("n_1(A)+2n_2(A)+3n_3(A) = (q+1)^2 for A off C");
  std::int64_t off_rc_seen = 0, on_rc_seen = 0;
  for (std::size_t r = 0; r < space.size(); ++r) {
    const std::int64_t n0 = rep.n_of_point(0, r), n1 = rep.n_of_point(1, r), n2 = rep.n_of_point(2, r),
                       n3 = rep.n_of_point(3, r);
    const auto where = [&] { return space.point(r).to_string(); };
    all.expect_eq(n0 + n1 + n2 + n3, q * q + q + 1, where());
    if (g.cubic().contains_rank(r)) continue;
    sq.expect_eq(n1 + 2 * n2 + 3 * n3, (q + 1) * (q + 1), where());
    if (g.chords().type_of_rank(r) == ChordType::RealChord) {
      ++on_rc_seen;
      on_rc.expect_eq(n2 + 3 * n3, formulas::exact(q * q + 3 * q, 2), where());
    } else {
      ++off_rc_seen;
      off_rc.expect_eq(n2 + 3 * n3, formulas::binom(q + 1, 2), where());
    }
  }
  off_rc.expect(off_rc_seen > 0, "no point off C and off real chords");
  on_rc.expect(on_rc_seen > 0, "no point on a real chord");
  out.push_back(all.result());
  out.push_back(off_rc.result());
  out.push_back(on_rc.result());
  out.push_back(sq.result());
  out.push_back(imag.result());
  return out;
}

namespace detail {

struct ExpectedN {
  int j;
  const char* label;
  std::array<std::int64_t, 4> n;  // d = 0..3
};

inline std::vector<ExpectedN> spot_expectations(std::int64_t q, int xi) {
  using formulas::exact;
  const std::int64_t s = q * q;
  std::vector<ExpectedN> e;
  e.push_back({1, "C", {0, exact(s - q + 2, 2), 2 * q, exact(s - q, 2)}});
  const auto ic_like = [&] { return std::array<std::int64_t, 4>{exact(s - q, 3), exact(s + q + 2, 2), q, exact(s - q, 6)}; };
  const auto rc_like = [&] { return std::array<std::int64_t, 4>{exact(s + q, 3), exact(s - q + 2, 2), q, exact(s + q, 6)}; };
  if (xi != 0) e.push_back({2, "T", {exact(s - 1, 3), exact(s - q + 4, 2), 2 * q - 1, exact(s - 3 * q + 2, 6)}});
  if (xi == 1) {
    e.push_back({4, "1_Gamma", ic_like()});
    e.push_back({5, "0_Gamma", {exact(s + q + 1, 3), exact(s - q, 2), q + 1, exact(s + q - 2, 6)}});
    e.push_back({3, "3_Gamma", {exact(s + q - 2, 3), exact(s - q + 6, 2), q - 2, exact(s + q + 4, 6)}});
  } else if (xi == -1) {
    e.push_back({4, "1_Gamma", rc_like()});
    e.push_back({5, "0_Gamma", {exact(s - q + 1, 3), exact(s + q, 2), q + 1, exact(s - q - 2, 6)}});
    e.push_back({3, "3_Gamma", {exact(s - q - 2, 3), exact(s + q + 6, 2), q - 2, exact(s - q + 4, 6)}});
  } else {
    e.push_back({2, "(q+1)_Gamma", ic_like()});
    e.push_back({5, "IC", ic_like()});
    e.push_back({4, "RC", rc_like()});
    e.push_back({3, "TO", {exact(s, 3), exact(s - q + 2, 2), 2 * q, exact(s - 3 * q, 6)}});
  }
  return e;
}

}  // namespace detail

/// Exact n_{d,•} values per point type, plus the W-point, cube-product and square-count lemmas.
inline std::vector<CheckResult> verify_spot_values(const CubicGeometry& g, const IncidenceReport& rep) {
  const std::int64_t q = g.q();
  const int xi = g.xi();
  const Field& f = g.field();
  const auto& cubic = g.cubic();
  std::vector<CheckResult> out;

  for (const auto& e : detail::spot_expectations(q, xi)) {
    detail::Tally t(std::string("n_{d,") + e.label + "} for d=0..3");
    for (int d = 0; d < 4; ++d) t.expect_eq(rep.n_of_orbit(d, e.j), e.n[d], "d=" + std::to_string(d));
    out.push_back(t.result());
  }

  if (xi == -1) {
    // 2 n_{d,0G} + n_{d,3G}
    const std::array<std::int64_t, 4> want = {q * q - q, formulas::exact(3 * (q * q + q + 2), 2), 3 * q,
                                              formulas::exact(q * q - q, 2)};
    detail::Tally t("2 n_{d,0_Gamma} + n_{d,3_Gamma} (xi = -1)");
    for (int d = 0; d < 4; ++d)
      t.expect_eq(2 * rep.n_of_orbit(d, 5) + rep.n_of_orbit(d, 3), want[d], "d=" + std::to_string(d));
    out.push_back(t.result());

    // W = (0,1,-1,0): three osculating planes; 3_C-planes through it split by whether P(∞) is used
    const ProjPoint w = ProjPoint::normalize({f.zero(), f.one(), -f.one(), f.zero()});
    out.push_back(expect_eq("W=(0,1,-1,0) lies on 3 osculating planes", g.osc_count_of_rank(w.rank()), 3));
    std::int64_t with_inf = 0, finite = 0;
    const auto& params = cubic.params();
    for (std::size_t a = 0; a < params.size(); ++a)
      for (std::size_t b = a + 1; b < params.size(); ++b)
        for (std::size_t c = b + 1; c < params.size(); ++c)
          if (incident(w, cubic.plane_through_params(params[a], params[b], params[c])))
            ++(params[c].is_infinity() ? with_inf : finite);
    const std::int64_t n1 = q % 2 == 0 ? q / 2 : (q - 1) / 2;
    const std::int64_t n2 =
        q % 2 == 0 ? formulas::exact(q * q - 4 * q + 4, 6) : formulas::exact(q * q - 4 * q + 7, 6);
    out.push_back(expect_eq("W: 3_C-planes through W and P(inf) (n')", with_inf, n1));
    out.push_back(expect_eq("W: 3_C-planes through W avoiding P(inf) (n'')", finite, n2));
    out.push_back(expect_eq("W: n_3(W) = (q^2-q+4)/6", rep.n_of_point(3, w.rank()), formulas::exact(q * q - q + 4, 6)));

    if (q % 2 == 1) {
      const auto v = count_square_values_of_f(f);
      out.push_back(expect_eq("#{a : a^2+a+1 is a square} = (q-1)/2", static_cast<std::int64_t>(v), (q - 1) / 2));
    }
  }

  if (xi == 1) {
    // points (c,0,0,1), c != 0, of the chord P(0)P(∞); 3_C-planes through them avoiding P(0), P(∞)
    const auto brute = triple_product_class_counts(f);
    const std::int64_t mc = formulas::exact((q - 1) * (q * q - 5 * q + 10), 18);
    const std::int64_t mnc = formulas::exact(2 * (q - 1) * (q * q - 5 * q + 4), 18);
    out.push_back(expect_eq("cube products: m_c from triple enumeration", static_cast<std::int64_t>(brute.cubes), mc));
    out.push_back(
        expect_eq("cube products: m_nc from triple enumeration", static_cast<std::int64_t>(brute.non_cubes), mnc));

    std::set<std::uint32_t> cubes;
    for (const auto& a : f.elements())
      if (!a.is_zero()) cubes.insert((a * a * a).encoding());
    detail::Tally osc("chord P(0)P(inf): (c,0,0,1) is 3_Gamma iff c is a cube, else 0_Gamma");
    std::int64_t on_cube = 0, on_noncube = 0;
    const auto& params = cubic.params();
    for (const auto& c : f.elements()) {
      if (c.is_zero()) continue;
      const ProjPoint x = ProjPoint::from_canonical({c, f.zero(), f.zero(), f.one()});
      const bool cube = cubes.count(c.encoding()) > 0;
      osc.expect_eq(g.osc_count_of_rank(x.rank()), cube ? 3 : 0, x.to_string());
      std::int64_t planes = 0;
      for (std::size_t a = 1; a < params.size() - 1; ++a)
        for (std::size_t b = a + 1; b < params.size() - 1; ++b)
          for (std::size_t d = b + 1; d < params.size() - 1; ++d)
            if (incident(x, cubic.plane_through_params(params[a], params[b], params[d]))) ++planes;
      (cube ? on_cube : on_noncube) += planes;
    }
    out.push_back(osc.result());
    out.push_back(expect_eq("chord P(0)P(inf): 3_C-planes avoiding endpoints through cube points = m_c", on_cube, mc));
    out.push_back(
        expect_eq("chord P(0)P(inf): 3_C-planes avoiding endpoints through non-cube points = m_nc", on_noncube, mnc));
  }
  return out;
}

namespace detail {

// The correlation x -> plane (x3, -3x2, 3x1, -x0).
inline std::array<Vec4, 4> polarity_matrix(const Field& f) {
  const auto z = f.zero(), o = f.one(), three = f.from_int(3);
  return {Vec4{z, z, z, o}, Vec4{z, z, -three, z}, Vec4{z, three, z, z}, Vec4{-o, z, z, z}};
}

inline Vec4 apply(const std::array<Vec4, 4>& m, const Vec4& x) {
  return {dot(m[0], x), dot(m[1], x), dot(m[2], x), dot(m[3], x)};
}

}  // namespace detail

/**
 * Null polarity x -> (x3, -3x2, 3x1, -x0): antisymmetric and invertible,
 * maps P(t) to π_osc(t) and each point orbit M_i onto the plane orbit N_i.
 * Throws GeometryError for q ≡ 0 (mod 3), where the map is degenerate.
 */
inline std::vector<CheckResult> null_polarity_check(const CubicGeometry& g, const OrbitPartition& part) {
  if (g.xi() == 0)
    throw GeometryError("null polarity is degenerate in characteristic 3 (q=" + std::to_string(g.q()) + ")");
  const auto m = detail::polarity_matrix(g.field());
  std::vector<CheckResult> out;

  detail::Tally anti("polarity matrix is antisymmetric and invertible");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) anti.expect(m[a][b] == -m[b][a], "entry " + std::to_string(a) + std::to_string(b));
  anti.expect(linalg::rank({m[0], m[1], m[2], m[3]}) == 4, "matrix is singular");
  out.push_back(anti.result());

  detail::Tally osc("polarity maps P(t) to the osculating plane at t");
  for (const auto& t : g.cubic().params()) {
    const ProjPlane img = ProjPlane::normalize(detail::apply(m, g.cubic().point(t).coords()));
    osc.expect(img == g.cubic().osculating_plane(t), "t=" + t.to_string() + ": " + img.to_string());
  }
  out.push_back(osc.result());

  detail::Tally orbits("polarity maps M_i onto N_i");
  for (int i = 0; i < 5; ++i) {
    std::vector<std::uint32_t> images;
    for (auto r : part.points[i])
      images.push_back(
          static_cast<std::uint32_t>(ProjPlane::normalize(detail::apply(m, g.space().point(r).coords())).rank()));
    std::sort(images.begin(), images.end());
    orbits.expect(images == part.planes[i], "M" + std::to_string(i + 1) + " is not mapped onto N" + std::to_string(i + 1));
  }
  out.push_back(orbits.result());
  return out;
}

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

/// Explicit 0/1 submatrix I_ij (1-based), rows N_i and columns M_j in rank order.
inline BitMatrix build_submatrix(const CubicGeometry& g, const OrbitPartition& part, int i, int j) {
  if (i < 1 || i > 5 || j < 1 || j > 5) throw std::out_of_range("submatrix indices must be in 1..5");
  const auto& rows = part.planes[i - 1];
  const auto& cols = part.points[j - 1];
  std::vector<std::int32_t> col_of(g.space().size(), -1);
  for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = static_cast<std::int32_t>(c);
  BitMatrix mat(rows.size(), std::vector<std::uint8_t>(cols.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto pt : g.space().points_on(g.space().plane(rows[r])))
      if (col_of[pt] >= 0) mat[r][static_cast<std::size_t>(col_of[pt])] = 1;
  return mat;
}

inline BitMatrix transpose(const BitMatrix& m) {
  if (m.empty()) return {};
  BitMatrix t(m[0].size(), std::vector<std::uint8_t>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m[a].size(); ++b) t[b][a] = m[a][b];
  return t;
}

/**
 * Sort rows, then columns, lexicographically until nothing moves. Equal
 * results prove two matrices equal up to row and column permutations; unequal
 * results prove nothing, so this is not a complete equivalence test.
 */
inline BitMatrix sorted_fixpoint(BitMatrix m) {
  for (int iter = 0; iter < 1000; ++iter) {
    const BitMatrix before = m;
    std::sort(m.begin(), m.end());
    m = transpose(m);
    std::sort(m.begin(), m.end());
    m = transpose(m);
    if (m == before) break;
  }
  return m;
}

/// Row-sum and column-sum multisets agree: necessary for permutation equivalence.
inline bool same_degree_profile(const BitMatrix& a, const BitMatrix& b) {
  auto profile = [](const BitMatrix& m) {
    std::vector<int> rows, cols(m.empty() ? 0 : m[0].size(), 0);
    for (const auto& row : m) {
      rows.push_back(static_cast<int>(std::count(row.begin(), row.end(), 1)));
      for (std::size_t c = 0; c < row.size(); ++c) cols[c] += row[c];
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    return std::make_pair(rows, cols);
  };
  if (a.size() != b.size()) return false;
  if (!a.empty() && a[0].size() != b[0].size()) return false;
  return profile(a) == profile(b);
}

/**
 * Transpose relations between submatrices. Parameter level always:
 * k_ij = r_ji and #N_i = #M_i for q ≢ 0 (mod 3); I_41^tr ~ I_14, I_15 and
 * I_42^tr ~ I_14, I_15 for q ≡ 0. With matrix_level and q ≤ matrix_q_ceiling,
 * the explicit matrices are compared: for q ≢ 0 the null polarity gives an
 * explicit row/column bijection (degree profiles are compared as well);
 * for q ≡ 0 the sorted fixpoints must agree.
 */
inline std::vector<CheckResult> transpose_relations_check(const CubicGeometry& g, const OrbitPartition& part,
                                                          const IncidenceReport& rep, bool matrix_level,
                                                          std::uint32_t matrix_q_ceiling = 7) {
  std::vector<CheckResult> out;
  if (g.xi() != 0) {
    detail::Tally p("k_ij = r_ji and #N_i = #M_i");
    for (int i = 1; i <= 5; ++i) {
      p.expect_eq(rep.sizes.planes[i - 1], rep.sizes.points[i - 1], "#N" + std::to_string(i) + " vs #M" + std::to_string(i));
      for (int j = 1; j <= 5; ++j)
        p.expect_eq(rep.cell(i, j).k(), rep.cell(j, i).r(), detail::cell_name("k", i, j) + " vs " + detail::cell_name("r", j, i));
    }
    out.push_back(p.result());
  } else {
    detail::Tally p("I_41^tr ~ I_14, I_15 and I_42^tr ~ I_14, I_15 (parameters)");
    for (int a : {1, 2})
      for (int b : {4, 5}) {
        const auto& s = rep.cell(4, a);
        const auto& t = rep.cell(1, b);
        const std::string nm = "I_4" + std::to_string(a) + "^tr vs I_1" + std::to_string(b);
        p.expect_eq(s.cols, t.rows, nm + " rows");
        p.expect_eq(s.rows, t.cols, nm + " cols");
        p.expect_eq(s.r(), t.k(), nm + " ones per row");
        p.expect_eq(s.k(), t.r(), nm + " ones per column");
      }
    out.push_back(p.result());
  }

  if (!matrix_level) return out;
  if (g.q() > matrix_q_ceiling) {
    out.push_back({"transpose relations (matrix level)", true,
                   "skipped: q=" + std::to_string(g.q()) + " above ceiling " + std::to_string(matrix_q_ceiling)});
    return out;
  }

  if (g.xi() != 0) {
    // x in π  <=>  A^{-1}π lies on Ax, so x -> Ax (rows) and π -> A^{-1}π (columns) carry I_ij^tr onto I_ji
    const auto m = detail::polarity_matrix(g.field());
    std::vector<std::uint32_t> polar(g.space().size()), inverse(g.space().size());
    for (std::size_t r = 0; r < g.space().size(); ++r) {
      polar[r] = static_cast<std::uint32_t>(ProjPlane::normalize(detail::apply(m, g.space().point(r).coords())).rank());
      inverse[polar[r]] = static_cast<std::uint32_t>(r);
    }
    detail::Tally w("I_ij^tr = I_ji via the null polarity (matrix level)");
    detail::Tally c("I_ij^tr and I_ji have equal degree profiles");
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        const std::string nm = detail::cell_name("I", i, j);
        for (auto x : part.points[j - 1]) {
          w.expect(g.plane_orbit(polar[x]) == j, nm + ": image of a point of M" + std::to_string(j) + " is not in N" +
                                                     std::to_string(j));
          for (auto pi : part.planes[i - 1]) {
            const bool lhs = incident(g.space().point(x), g.space().plane(pi));
            const bool rhs = incident(g.space().point(inverse[pi]), g.space().plane(polar[x]));
            if (lhs != rhs) {
              w.expect(false, nm + ": incidence not preserved at " + g.space().point(x).to_string());
              break;
            }
          }
        }
        c.expect(same_degree_profile(transpose(build_submatrix(g, part, i, j)), build_submatrix(g, part, j, i)),
                 nm + "^tr vs " + detail::cell_name("I", j, i));
      }
    out.push_back(w.result());
    out.push_back(c.result());
  } else {
    detail::Tally c("I_41^tr ~ I_14, I_15 and I_42^tr ~ I_14, I_15 (matrix level)");
    for (int a : {1, 2})
      for (int b : {4, 5}) {
        const auto lhs = transpose(build_submatrix(g, part, 4, a));
        const auto rhs = build_submatrix(g, part, 1, b);
        const std::string nm = "I_4" + std::to_string(a) + "^tr vs I_1" + std::to_string(b);
        c.expect(same_degree_profile(lhs, rhs), nm + ": degree profiles differ");
        c.expect(sorted_fixpoint(lhs) == sorted_fixpoint(rhs), nm + ": sorted fixpoints differ (inconclusive)");
      }
    out.push_back(c.result());
  }
  return out;
}

/// A t-(v,k,λ) design test on blocks over the point set {0..v-1}.
struct DesignCheck {
  std::string subject;
  int t = 0, v = 0, k = 0;
  std::int64_t lambda = 0;
  bool pass = false;
  std::string witness;
  // for a decomposable design: the two block families
  std::optional<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> parts;
};

inline DesignCheck check_t_design(std::string subject, const std::vector<std::vector<int>>& blocks, int t, int v, int k,
                                  std::int64_t lambda) {
  DesignCheck d{std::move(subject), t, v, k, lambda, true, {}, std::nullopt};
  std::map<std::vector<int>, std::int64_t> cover;
  std::vector<int> sub(static_cast<std::size_t>(t));
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != k) {
      d.pass = false;
      d.witness = "block of size " + std::to_string(b.size());
      return d;
    }
    // every t-subset of the (sorted) block
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int a = 0; a < t; ++a) idx[a] = a;
    while (true) {
      for (int a = 0; a < t; ++a) sub[a] = b[idx[a]];
      ++cover[sub];
      int a = t - 1;
      while (a >= 0 && idx[a] == k - t + a) --a;
      if (a < 0) break;
      ++idx[a];
      for (int c = a + 1; c < t; ++c) idx[c] = idx[c - 1] + 1;
    }
  }
  // every t-subset of {0..v-1}
  std::vector<int> s(static_cast<std::size_t>(t));
  for (int a = 0; a < t; ++a) s[a] = a;
  while (true) {
    const auto it = cover.find(s);
    const std::int64_t got = it == cover.end() ? 0 : it->second;
    if (got != lambda) {
      d.pass = false;
      std::ostringstream os;
      os << "subset {";
      for (int a = 0; a < t; ++a) os << (a ? "," : "") << s[a];
      os << "} lies in " << got << " blocks";
      d.witness = os.str();
      return d;
    }
    int a = t - 1;
    while (a >= 0 && s[a] == v - t + a) --a;
    if (a < 0) break;
    ++s[a];
    for (int c = a + 1; c < t; ++c) s[c] = s[c - 1] + 1;
  }
  return d;
}

/// Blocks of I_i1: for each plane of N_i, the sorted parameter indices of its curve points.
inline std::vector<std::vector<int>> curve_blocks(const CubicGeometry& g, const std::vector<std::uint32_t>& planes) {
  std::vector<std::vector<int>> blocks;
  for (auto r : planes) {
    std::vector<int> b;
    const ProjPlane pi = g.space().plane(r);
    for (std::size_t t = 0; t < g.cubic().size(); ++t)
      if (incident(g.cubic().points()[t], pi)) b.push_back(static_cast<int>(t));
    blocks.push_back(b);
  }
  return blocks;
}

/**
 * I_21 as a 2-(q+1,2,2) design split into two 2-(q+1,2,1) designs (one of the
 * two 2_C-planes through each real chord in each part), and I_31 as a
 * 3-(q+1,3,1) and a 2-(q+1,3,q-1) design.
 */
inline std::vector<DesignCheck> design_checks(const CubicGeometry& g, const OrbitPartition& part) {
  const int v = static_cast<int>(g.cubic().size());
  const std::int64_t q = g.q();
  std::vector<DesignCheck> out;

  auto i21 = check_t_design("I_21", curve_blocks(g, part.planes[1]), 2, v, 2, 2);
  std::vector<std::uint32_t> b1, b2;
  std::string split_error;
  for (const auto& chord : g.chords().chords()) {
    if (chord.type != ChordType::RealChord) continue;
    std::vector<std::uint32_t> two;
    for (const auto& pi : planes_through_line(chord.line))
      if (g.plane_class(pi.rank()) == PlaneClass::TwoSec) two.push_back(static_cast<std::uint32_t>(pi.rank()));
    if (two.size() != 2) {
      split_error = "a real chord lies on " + std::to_string(two.size()) + " 2_C-planes";
      break;
    }
    b1.push_back(two[0]);
    b2.push_back(two[1]);
  }
  auto all = b1;
  all.insert(all.end(), b2.begin(), b2.end());
  std::sort(all.begin(), all.end());
  if (split_error.empty() && all != part.planes[1]) split_error = "the two parts do not partition N_2";
  const auto blocks1 = curve_blocks(g, b1), blocks2 = curve_blocks(g, b2);
  const auto d1 = check_t_design("I_21 part B1", blocks1, 2, v, 2, 1);
  const auto d2 = check_t_design("I_21 part B2", blocks2, 2, v, 2, 1);
  i21.parts = std::make_pair(blocks1, blocks2);
  if (!split_error.empty()) {
    i21.pass = false;
    i21.witness = split_error;
  }
  out.push_back(i21);
  out.push_back(d1);
  out.push_back(d2);

  const auto b31 = curve_blocks(g, part.planes[2]);
  out.push_back(check_t_design("I_31", b31, 3, v, 3, 1));
  out.push_back(check_t_design("I_31", b31, 2, v, 3, q - 1));
  return out;
}

inline CheckResult to_check(const DesignCheck& d) {
  std::ostringstream os;
  os << d.subject << " is a " << d.t << "-(" << d.v << "," << d.k << "," << d.lambda << ") design";
  return {os.str(), d.pass, d.witness};
}

enum class DumpFormat { Csv, Rle };

inline constexpr std::uint64_t kDefaultCellCeiling = 4'000'000;

/**
 * Writes I_ij with row/column headers. CSV: the first row lists the point
 * coordinates, each later row starts with the plane coordinates followed by
 * 0/1 cells. RLE: a header line, the point list, then per plane its
 * coordinates and the run lengths of alternating 0s and 1s, starting with 0s.
 */
inline void dump_submatrix(const CubicGeometry& g, const OrbitPartition& part, int i, int j, DumpFormat format,
                           std::ostream& os, std::uint64_t cell_ceiling = kDefaultCellCeiling) {
  if (i < 1 || i > 5 || j < 1 || j > 5) throw std::out_of_range("submatrix indices must be in 1..5");
  const std::uint64_t cells = std::uint64_t{part.planes[i - 1].size()} * part.points[j - 1].size();
  if (cells > cell_ceiling)
    throw std::length_error("I_" + std::to_string(i) + std::to_string(j) + " has " + std::to_string(cells) +
                            " cells, above the ceiling " + std::to_string(cell_ceiling));
  const auto mat = build_submatrix(g, part, i, j);
  const auto& rows = part.planes[i - 1];
  const auto& cols = part.points[j - 1];
  if (format == DumpFormat::Csv) {
    os << "\"N" << i << "\\M" << j << "\"";
    for (auto c : cols) os << ",\"" << g.space().point(c).to_string() << '"';
    os << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
      os << '"' << g.space().plane(rows[r]).to_string() << '"';
      for (auto x : mat[r]) os << ',' << int{x};
      os << '\n';
    }
    return;
  }
  os << "# I_" << i << j << " q=" << g.q() << " rows=" << rows.size() << " cols=" << cols.size() << '\n';
  os << "cols";
  for (auto c : cols) os << ' ' << g.space().point(c).to_string();
  os << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << g.space().plane(rows[r]).to_string() << ':';
    std::uint8_t cur = 0;
    std::size_t run = 0;
    for (auto x : mat[r]) {
      if (x == cur) {
        ++run;
        continue;
      }
      os << ' ' << run;
      cur = x;
      run = 1;
    }
    os << ' ' << run << '\n';
  }
}

}  // namespace twcubic
