#pragma once

/**
 * @file covering.hpp
 * @brief The [q+1, q-3, 5]_q GDRS code whose parity-check columns are the
 *        cubic points: syndrome census, covering radius, deep-hole
 *        multiplicities, μ-density and the (2,μ)-saturation of C.
 *
 * A syndrome s ∈ F_q^4 is indexed by sum enc(s_i) q^i. The coset-leader
 * weight w(s) is found by marking syndromes reachable with 0, 1, 2 and 3
 * columns; for w(s) = 3 the multiplicity m(s) is the number of weight-3
 * words with syndrome s.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twcubic/check.hpp"
#include "twcubic/classify.hpp"
#include "twcubic/formulas.hpp"
#include "twcubic/incidence.hpp"
#include "twcubic/parallel.hpp"

namespace twcubic {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

struct GdrsCode {
  Field field;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t d = 0;
  std::vector<Vec4> columns;  // cubic points in parameter order
};

/// H has the cubic points as columns; all 4-subsets of columns are checked independent.
inline GdrsCode build_gdrs(const TwistedCubic& cubic) {
  const std::uint32_t q = cubic.q();
  if (q < 5) throw std::invalid_argument("the GDRS code needs q >= 5 (got q=" + std::to_string(q) + ")");
  GdrsCode c{cubic.field(), q + 1, q - 3, 5, {}};
  for (const auto& p : cubic.points()) c.columns.push_back(p.coords());
  const std::size_t n = c.columns.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t x = b + 1; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (linalg::rank({c.columns[a], c.columns[b], c.columns[x], c.columns[y]}) != 4)
            throw std::logic_error("columns " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(x) +
                                   "," + std::to_string(y) + " of H are dependent");
  return c;
}

inline std::uint32_t syndrome_index(const Vec4& s) {
  const std::uint32_t q = s[0].order();
  return s[0].encoding() + q * (s[1].encoding() + q * (s[2].encoding() + q * s[3].encoding()));
}

inline Vec4 syndrome_vector(const Field& f, std::uint32_t index) {
  const std::uint32_t q = f.q();
  Vec4 v;
  for (int i = 0; i < 4; ++i, index /= q) v[i] = f.element(index % q);
  return v;
}

inline constexpr std::uint8_t kUnreached = 255;

struct SyndromeCensus {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::vector<std::uint8_t> weight;        // coset-leader weight, kUnreached above 3
  std::vector<std::uint32_t> mult2;        // weight-2 words with this syndrome
  std::vector<std::uint32_t> mult3;        // weight-3 words with this syndrome
  std::array<std::uint64_t, 5> by_weight{};  // syndromes of weight 0,1,2,3 and unreached

  std::uint64_t deep_holes() const { return by_weight[3]; }
};

inline SyndromeCensus syndrome_census(const GdrsCode& code, unsigned threads = 1) {
  const Field& f = code.field;
  const std::uint32_t q = f.q();
  const std::size_t total = std::size_t{q} * q * q * q;
  SyndromeCensus c;
  c.q = q;
  c.n = code.n;
  c.weight.assign(total, kUnreached);
  c.mult2.assign(total, 0);
  c.mult3.assign(total, 0);

  // scaled[i][λ-1] = λ h_i
  std::vector<std::vector<Vec4>> scaled(code.n);
  for (std::uint32_t i = 0; i < code.n; ++i)
    for (std::uint32_t l = 1; l < q; ++l) {
      Vec4 v;
      for (int x = 0; x < 4; ++x) v[x] = f.element(l) * code.columns[i][x];
      scaled[i].push_back(v);
    }
  auto add = [](const Vec4& a, const Vec4& b) { return Vec4{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; };

  c.weight[0] = 0;
  for (std::uint32_t i = 0; i < code.n; ++i)
    for (const auto& v : scaled[i]) c.weight[syndrome_index(v)] = std::min<std::uint8_t>(c.weight[syndrome_index(v)], 1);
  for (std::uint32_t i = 0; i < code.n; ++i)
    for (std::uint32_t j = i + 1; j < code.n; ++j)
      for (const auto& a : scaled[i])
        for (const auto& b : scaled[j]) {
          const auto s = syndrome_index(add(a, b));
          ++c.mult2[s];
          c.weight[s] = std::min<std::uint8_t>(c.weight[s], 2);
        }

  std::vector<std::array<std::uint32_t, 3>> triples;
  for (std::uint32_t i = 0; i < code.n; ++i)
    for (std::uint32_t j = i + 1; j < code.n; ++j)
      for (std::uint32_t k = j + 1; k < code.n; ++k) triples.push_back({i, j, k});
  threads = std::max(1u, threads);
  std::vector<std::vector<std::uint32_t>> partial(threads);
  parallel_ranges(triples.size(), threads, [&](std::size_t b, std::size_t e, unsigned w) {
    auto& m = partial[w];
    m.assign(total, 0);
    for (std::size_t t = b; t < e; ++t) {
      const auto [i, j, k] = triples[t];
      for (const auto& x : scaled[i])
        for (const auto& y : scaled[j]) {
          const Vec4 xy = add(x, y);
          for (const auto& z : scaled[k]) ++m[syndrome_index(add(xy, z))];
        }
    }
  });
  for (const auto& m : partial)
    for (std::size_t s = 0; s < m.size(); ++s) c.mult3[s] += m[s];
  for (std::size_t s = 0; s < total; ++s)
    if (c.weight[s] == kUnreached && c.mult3[s] > 0) c.weight[s] = 3;
  for (auto w : c.weight) ++c.by_weight[w == kUnreached ? 4 : w];
  return c;
}

/// Largest coset-leader weight; throws std::logic_error with a witness unless it is 3.
inline int covering_radius(const SyndromeCensus& c) {
  for (std::size_t s = 0; s < c.weight.size(); ++s)
    if (c.weight[s] == kUnreached)
      throw std::logic_error("syndrome index " + std::to_string(s) + " needs more than 3 columns");
  const int r = *std::max_element(c.weight.begin(), c.weight.end());
  if (r != 3) throw std::logic_error("covering radius " + std::to_string(r) + ", expected 3");
  return r;
}

namespace detail {

// Basis of {x ∈ F_q^n : H x = 0} for the 4×n parity-check matrix.
inline std::vector<std::vector<FieldElement>> code_basis(const GdrsCode& code) {
  const Field& f = code.field;
  const std::size_t n = code.n;
  std::vector<std::vector<FieldElement>> h(4, std::vector<FieldElement>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (int r = 0; r < 4; ++r) h[r][c] = code.columns[c][r];
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < 4; ++col) {
    std::size_t p = row;
    while (p < 4 && h[p][col].is_zero()) ++p;
    if (p == 4) continue;
    std::swap(h[row], h[p]);
    const auto inv = h[row][col].inv();
    for (auto& x : h[row]) x = x * inv;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == row || h[r][col].is_zero()) continue;
      const auto m = h[r][col];
      for (std::size_t k = 0; k < n; ++k) h[r][k] = h[r][k] - m * h[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<FieldElement> v(n, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -h[r][free];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace detail

/// Weight distribution of the code by listing all q^k codewords.
inline std::vector<std::uint64_t> enumerate_weight_distribution(const GdrsCode& code) {
  const Field& f = code.field;
  const auto basis = detail::code_basis(code);
  const std::size_t k = basis.size(), n = code.n;
  if (k != code.k) throw std::logic_error("code dimension " + std::to_string(k) + ", expected " + std::to_string(code.k));
  std::vector<std::uint64_t> dist(n + 1, 0);
  // prefix[l] = sum of the first l basis vectors scaled by their digits
  std::vector<std::vector<FieldElement>> prefix(k + 1, std::vector<FieldElement>(n, f.zero()));
  std::vector<std::uint32_t> digit(k, 0);
  std::size_t changed = 0;
  while (true) {
    for (std::size_t l = changed; l < k; ++l) {
      const auto a = f.element(digit[l]);
      for (std::size_t x = 0; x < n; ++x) prefix[l + 1][x] = prefix[l][x] + a * basis[l][x];
    }
    std::size_t w = 0;
    for (const auto& x : prefix[k]) w += !x.is_zero();
    ++dist[w];
    std::size_t l = k;
    while (l > 0 && digit[l - 1] == f.q() - 1) digit[--l] = 0;
    if (l == 0) break;
    ++digit[l - 1];
    changed = l - 1;
  }
  return dist;
}

struct McfReport {
  std::uint32_t q = 0, n = 0, k = 0, d = 0;
  int R = 0;
  std::int64_t mu = 0;      // closed form
  std::int64_t mu_min = 0;  // least multiplicity over deep holes
  std::uint64_t D = 0;      // deep-hole syndromes
  BigInt sum_m = 0;         // sum of m(s) over deep holes
  BigInt A5 = 0;            // MDS closed form (q-1) C(n,5)
  std::optional<std::uint64_t> A5_enumerated;
  Rational gamma_direct;
  Rational gamma_formula;
  // the ratio printed in the proof of the density limit; it is not a check target
  std::optional<Rational> printed_closed_form;
  std::vector<CheckResult> checks;
};

/// μ_min, deep-hole count and μ-density; A5 is enumerated when q^k ≤ enumeration_cap.
inline McfReport mu_and_density(const GdrsCode& code, const SyndromeCensus& c,
                                std::uint64_t enumeration_cap = 10'000'000) {
  McfReport r;
  const std::int64_t q = code.field.q();
  r.q = code.field.q();
  r.n = code.n;
  r.k = code.k;
  r.d = code.d;
  r.R = *std::max_element(c.weight.begin(), c.weight.end());
  r.mu = formulas::mu(q);
  r.D = c.deep_holes();
  r.mu_min = -1;
  bool at_least_mu = true;
  for (std::size_t s = 0; s < c.weight.size(); ++s) {
    if (c.weight[s] != 3) continue;
    const std::int64_t m = c.mult3[s];
    r.sum_m += m;
    if (r.mu_min < 0 || m < r.mu_min) r.mu_min = m;
    if (m < r.mu) at_least_mu = false;
  }
  const std::int64_t n = code.n;
  r.A5 = BigInt(q - 1) * formulas::binom(n, 5);
  if (r.D == 0 || r.mu <= 0) throw std::logic_error("no deep holes or non-positive mu");
  r.gamma_direct = Rational(r.sum_m) / (BigInt(r.mu) * r.D);
  const BigInt qm1 = q - 1;
  const BigInt num = BigInt(formulas::binom(n, 3)) * qm1 * qm1 * qm1 - BigInt(formulas::binom(5, 2)) * r.A5;
  const BigInt q4 = BigInt(q) * q * q * q;
  const BigInt den = BigInt(r.mu) * (q4 - 1 - (BigInt(q) * q - 1) - BigInt(formulas::binom(n, 2)) * qm1 * qm1);
  r.gamma_formula = Rational(num) / den;
  if (formulas::xi_of(q) != 0) {
    const BigInt Q = q;
    const BigInt pn = Q * Q * Q * Q * Q * Q - 6 * Q * Q * Q * Q + 4 * Q * Q * Q + 5 * Q * Q - 4 * Q;
    const BigInt pd = Q * Q * Q * Q * Q * Q - 9 * Q * Q * Q * Q + 8 * Q * Q * Q + 8 * Q * Q - 8 * Q;
    r.printed_closed_form = Rational(pn) / pd;
  }

  double words = 1;
  for (std::uint32_t i = 0; i < code.k; ++i) words *= static_cast<double>(q);
  if (words <= static_cast<double>(enumeration_cap)) {
    const auto dist = enumerate_weight_distribution(code);
    r.A5_enumerated = dist.at(5);
    bool mds = true;
    for (int w = 1; w < 5; ++w) mds = mds && dist[w] == 0;
    r.checks.push_back({"enumerated code has minimum distance 5", mds, mds ? "" : "a codeword of weight < 5 exists"});
    r.checks.push_back(expect_eq("A5 by enumeration = (q-1) C(q+1,5)", BigInt(*r.A5_enumerated), r.A5));
  }

  r.checks.push_back(expect_eq("covering radius R = 3", r.R, 3));
  r.checks.push_back(expect_eq("mu_min = mu", r.mu_min, r.mu));
  r.checks.push_back({"every deep hole has multiplicity >= mu", at_least_mu, at_least_mu ? "" : "some m(s) < mu"});
  r.checks.push_back(expect_eq("deep holes D = q^4 - 1 - n(q-1) - C(n,2)(q-1)^2", BigInt(r.D),
                               q4 - 1 - BigInt(n) * qm1 - BigInt(formulas::binom(n, 2)) * qm1 * qm1));
  r.checks.push_back({"gamma direct = gamma formula (exact)", r.gamma_direct == r.gamma_formula,
                      r.gamma_direct == r.gamma_formula
                          ? ""
                          : "direct " + to_string(r.gamma_direct) + " vs formula " + to_string(r.gamma_formula)});
  r.checks.push_back({"gamma > 1", r.gamma_direct > 1, to_string(r.gamma_direct)});
  return r;
}

/// Weight counts 1, n(q-1), C(n,2)(q-1)^2 below half the distance; each weight-2 syndrome from one word.
inline std::vector<CheckResult> census_checks(const SyndromeCensus& c) {
  const std::uint64_t q = c.q, n = c.n;
  std::vector<CheckResult> out;
  out.push_back(expect_eq("syndromes of weight 0", c.by_weight[0], std::uint64_t{1}));
  out.push_back(expect_eq("syndromes of weight 1", c.by_weight[1], n * (q - 1)));
  out.push_back(expect_eq("syndromes of weight 2", c.by_weight[2], n * (n - 1) / 2 * (q - 1) * (q - 1)));
  out.push_back(expect_eq("syndromes of weight 3", c.by_weight[3],
                          q * q * q * q - 1 - n * (q - 1) - n * (n - 1) / 2 * (q - 1) * (q - 1)));
  out.push_back(expect_eq("syndromes beyond weight 3", c.by_weight[4], std::uint64_t{0}));
  return out;
}

/// Newton radius 2: weight-2 syndromes have one word each, deep holes at least two.
inline std::vector<CheckResult> newton_radius_check(const SyndromeCensus& c) {
  std::uint64_t bad2 = 0, single3 = 0, seen3 = 0;
  for (std::size_t s = 0; s < c.weight.size(); ++s) {
    if (c.weight[s] == 2 && c.mult2[s] != 1) ++bad2;
    if (c.weight[s] == 3) {
      ++seen3;
      if (c.mult3[s] < 2) ++single3;
    }
  }
  return {
      {"every weight-2 syndrome comes from exactly one weight-2 word", bad2 == 0,
       bad2 ? std::to_string(bad2) + " syndromes with another multiplicity" : ""},
      {"every deep hole has multiplicity >= 2 (triple errors not uniquely correctable)", seen3 > 0 && single3 == 0,
       single3 ? std::to_string(single3) + " deep holes with multiplicity < 2" : ""},
  };
}

/// m(λs) = m(s) for every deep hole s and λ ≠ 0.
inline CheckResult scalar_invariance_check(const Field& f, const SyndromeCensus& c) {
  std::uint64_t bad = 0;
  std::string witness;
  for (std::size_t s = 0; s < c.weight.size(); ++s) {
    if (c.weight[s] != 3) continue;
    const Vec4 v = syndrome_vector(f, static_cast<std::uint32_t>(s));
    for (std::uint32_t l = 2; l < f.q(); ++l) {
      const auto lam = f.element(l);
      const auto t = syndrome_index({lam * v[0], lam * v[1], lam * v[2], lam * v[3]});
      if (c.weight[t] != 3 || c.mult3[t] != c.mult3[s]) {
        if (!bad) witness = "syndrome index " + std::to_string(s) + " scaled by " + std::to_string(l);
        ++bad;
      }
    }
  }
  return {"m(lambda s) = m(s) for all deep holes", bad == 0, witness};
}

/**
 * Deep holes against the point geometry: a syndrome has weight 1, 2 or 3
 * exactly when its point is on C, on a real chord, or elsewhere; m(s) equals
 * the number of 3_C-planes through the point; the minimum sits on T-points
 * (TO-points when q ≡ 0 mod 3); D = (q-1) · #(points off C and off real chords).
 */
inline std::vector<CheckResult> geometric_cross_check(const CubicGeometry& g, const IncidenceReport& rep,
                                                      const SyndromeCensus& c) {
  const Field& f = g.field();
  detail::Tally weight_vs_point("coset-leader weight matches the point type (C / real chord / other)");
  detail::Tally m_vs_planes("m(s) = number of 3_C-planes through the point of s");
  std::int64_t min_m = -1;
  std::set<PointClass> at_min;
  for (std::size_t s = 1; s < c.weight.size(); ++s) {
    const ProjPoint p = ProjPoint::normalize(syndrome_vector(f, static_cast<std::uint32_t>(s)));
    const auto r = p.rank();
    int want = 3;
    if (g.cubic().contains_rank(r))
      want = 1;
    else if (g.chords().type_of_rank(r) == ChordType::RealChord)
      want = 2;
    weight_vs_point.expect_eq(int{c.weight[s]}, want, p.to_string());
    if (c.weight[s] != 3) continue;
    const std::int64_t m = c.mult3[s];
    m_vs_planes.expect_eq(m, rep.n_of_point(3, r), p.to_string());
    if (min_m < 0 || m < min_m) {
      min_m = m;
      at_min.clear();
    }
    if (m == min_m) at_min.insert(g.point_class(r));
  }
  std::vector<CheckResult> out{weight_vs_point.result(), m_vs_planes.result()};
  const PointClass expect_min = g.xi() != 0 ? PointClass::T : PointClass::TO;
  std::string seen;
  for (auto pc : at_min) seen += std::string(seen.empty() ? "" : ",") + to_string(pc);
  out.push_back({std::string("minimum multiplicity is attained exactly on ") + to_string(expect_min) + "-points",
                 at_min == std::set<PointClass>{expect_min}, "attained on " + seen});
  std::uint64_t off_rc = 0;
  for (std::size_t r = 0; r < g.space().size(); ++r)
    if (!g.cubic().contains_rank(r) && g.chords().type_of_rank(r) != ChordType::RealChord) ++off_rc;
  out.push_back(expect_eq("D = (q-1) x #(points off C and off real chords)", c.deep_holes(), (g.q() - 1) * off_rc));
  return out;
}

struct SaturationResult {
  bool m1 = false;  // S spans PG(3,q)
  bool m2 = false;  // some point is on no bisecant of S
  bool m3 = false;  // every such point is on >= mu planes through 3 points of S
  std::int64_t min_planes = -1;
  std::string witness;
  bool saturating() const { return m1 && m2 && m3; }
};

/// (2,μ)-saturation of an arbitrary point set S, by direct enumeration.
inline SaturationResult check_saturating(const ProjectiveSpace& space, const std::vector<ProjPoint>& S,
                                         std::int64_t mu) {
  SaturationResult res;
  std::vector<Vec4> rows;
  for (const auto& p : S) rows.push_back(p.coords());
  res.m1 = !rows.empty() && linalg::rank(rows) == 4;

  std::vector<bool> on_bisecant(space.size(), false);
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      const ProjLine l = line_through(S[a], S[b]);
      for (const auto& p : l.points()) on_bisecant[p.rank()] = true;
    }

  std::set<std::uint64_t> planes;
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a + 1; b < S.size(); ++b)
      for (std::size_t c = b + 1; c < S.size(); ++c)
        if (linalg::rank({S[a].coords(), S[b].coords(), S[c].coords()}) == 3)
          planes.insert(plane_through(S[a], S[b], S[c]).rank());
  std::vector<std::int64_t> count(space.size(), 0);
  for (auto r : planes)
    for (auto p : space.points_on(space.plane(r))) ++count[p];

  res.m3 = true;
  for (std::size_t r = 0; r < space.size(); ++r) {
    if (on_bisecant[r]) continue;
    res.m2 = true;
    if (res.min_planes < 0 || count[r] < res.min_planes) res.min_planes = count[r];
    if (count[r] < mu && res.m3) {
      res.m3 = false;
      res.witness = "point " + space.point(r).to_string() + " lies on " + std::to_string(count[r]) + " planes";
    }
  }
  if (!res.m2) res.witness = "every point lies on a bisecant";
  if (!res.m1) res.witness = "S does not span PG(3,q)";
  return res;
}

/// M1-M3 for C with μ from the closed form; with `minimality`, every single deletion must break saturation.
inline std::vector<CheckResult> verify_saturating(const CubicGeometry& g, bool minimality) {
  const std::int64_t mu = formulas::mu(g.q());
  const auto& pts = g.cubic().points();
  const auto res = check_saturating(g.space(), pts, mu);
  std::vector<CheckResult> out;
  out.push_back({"M1: C spans PG(3,q)", res.m1, res.m1 ? "" : res.witness});
  out.push_back({"M2: some point lies on no bisecant of C", res.m2, res.m2 ? "" : res.witness});
  out.push_back({"M3: every such point lies on >= mu planes through 3 points of C", res.m3, res.witness});
  out.push_back(expect_eq("M3 minimum equals mu", res.min_planes, mu));
  if (minimality) {
    detail::Tally t("minimal: deleting any point of C breaks (2,mu)-saturation");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto rest = pts;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      t.expect(!check_saturating(g.space(), rest, mu).saturating(), "deleting " + pts[i].to_string() + " keeps it saturating");
    }
    out.push_back(t.result());
  }
  return out;
}

/// Trend of γ over a grid of reports taken in increasing q: strict decrease, and γ - 1 < 4/q.
inline std::vector<CheckResult> density_trend(const std::vector<McfReport>& reports) {
  std::string grid;
  for (const auto& r : reports) grid += (grid.empty() ? "" : ", ") + ("q=" + std::to_string(r.q) + ": " + to_string(r.gamma_direct));
  std::string rise;
  for (std::size_t a = 1; a < reports.size(); ++a)
    if (!(reports[a].gamma_direct < reports[a - 1].gamma_direct))
      rise += (rise.empty() ? "" : "; ") + ("gamma(" + std::to_string(reports[a].q) + ") = " +
                                           to_string(reports[a].gamma_direct) + " >= gamma(" +
                                           std::to_string(reports[a - 1].q) + ") = " +
                                           to_string(reports[a - 1].gamma_direct));
  std::string wide;
  for (const auto& r : reports)
    if (!(r.gamma_direct - 1 < Rational(4, r.q))) wide += (wide.empty() ? "" : "; ") + ("q=" + std::to_string(r.q));
  return {
      {"gamma strictly decreasing over the grid", rise.empty(), rise.empty() ? grid : rise},
      {"gamma - 1 < 4/q over the grid", wide.empty(), wide.empty() ? grid : wide},
  };
}

/// CSV "weight,syndromes" for coset-leader weights 0..3.
inline void write_weight_histogram(const SyndromeCensus& c, std::ostream& os) {
  os << "weight,syndromes\n";
  for (int w = 0; w < 4; ++w) os << w << ',' << c.by_weight[w] << '\n';
  if (c.by_weight[4]) os << ">3," << c.by_weight[4] << '\n';
}

}  // namespace twcubic
