#include <gtest/gtest.h>

#include <sstream>

#include "twcubic/covering.hpp"
#include "twcubic/suite.hpp"

using namespace twcubic;

namespace {

void expect_all_pass(const std::vector<CheckResult>& checks, const std::string& where) {
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << where << ": " << c.name << ": " << c.witness;
}

struct CodeSetup {
  explicit CodeSetup(std::uint32_t q, unsigned threads = 1)
      : inc(run_incidence(make_field_of_order(q))), code(build_gdrs(inc.geometry->cubic())),
        census(syndrome_census(code, threads)) {}
  IncidenceRun inc;
  GdrsCode code;
  SyndromeCensus census;
};

// Every vector of F_5^6, its syndrome and its weight.
TEST(Census, MatchesBruteForceOverAllVectorsAtQ5) {
  const CodeSetup s(5);
  const Field& f = s.code.field;
  const std::size_t total = 625;
  std::vector<int> min_weight(total, 99);
  std::vector<std::uint32_t> w2(total, 0), w3(total, 0);
  std::vector<std::uint32_t> digit(6, 0);
  for (std::uint32_t word = 0; word < 15625; ++word) {
    std::uint32_t x = word;
    int wt = 0;
    Vec4 syn{f.zero(), f.zero(), f.zero(), f.zero()};
    for (int c = 0; c < 6; ++c, x /= 5) {
      const auto a = f.element(x % 5);
      wt += !a.is_zero();
      for (int r = 0; r < 4; ++r) syn[r] += a * s.code.columns[c][r];
    }
    const auto idx = syndrome_index(syn);
    min_weight[idx] = std::min(min_weight[idx], wt);
    if (wt == 2) ++w2[idx];
    if (wt == 3) ++w3[idx];
  }
  for (std::size_t idx = 0; idx < total; ++idx) {
    ASSERT_EQ(int{s.census.weight[idx]}, min_weight[idx]) << idx;
    ASSERT_EQ(s.census.mult2[idx], w2[idx]) << idx;
    ASSERT_EQ(s.census.mult3[idx], w3[idx]) << idx;
  }
  EXPECT_EQ(covering_radius(s.census), 3);
}

TEST(Census, ThreadCountDoesNotChangeCounts) {
  const CodeSetup one(8, 1), four(8, 4);
  EXPECT_EQ(one.census.mult3, four.census.mult3);
  EXPECT_EQ(one.census.weight, four.census.weight);
}

TEST(Code, ParametersAndMdsWeightDistribution) {
  const CodeSetup s(7);
  EXPECT_EQ(s.code.n, 8u);
  EXPECT_EQ(s.code.k, 4u);
  EXPECT_EQ(s.code.d, 5u);
  const auto dist = enumerate_weight_distribution(s.code);
  // A_w = C(n,w) sum_{j=0}^{w-d} (-1)^j C(w,j) (q^{w-d+1-j} - 1)
  const std::int64_t q = 7, n = 8, d = 5;
  for (std::int64_t w = 1; w <= n; ++w) {
    std::int64_t a = 0;
    for (std::int64_t j = 0; j <= w - d; ++j) {
      std::int64_t pw = 1;
      for (std::int64_t e = 0; e < w - d + 1 - j; ++e) pw *= q;
      a += (j % 2 ? -1 : 1) * formulas::binom(w, j) * (pw - 1);
    }
    EXPECT_EQ(static_cast<std::int64_t>(dist[w]), w < d ? 0 : formulas::binom(n, w) * a) << "w=" << w;
  }
  EXPECT_EQ(dist[0], 1u);
}

TEST(Code, RejectsSmallFields) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const ProjectiveSpace space(make_field_of_order(q));
    const TwistedCubic cubic(space);
    EXPECT_THROW(build_gdrs(cubic), std::invalid_argument) << q;
  }
}

TEST(Density, Q5DirectFromTheCensus) {
  const CodeSetup s(5);
  const auto r = mu_and_density(s.code, s.census);
  EXPECT_EQ(r.mu, 2);
  EXPECT_EQ(r.mu_min, 2);
  EXPECT_EQ(r.D, 360u);
  EXPECT_EQ(r.sum_m, 1040);
  EXPECT_EQ(r.gamma_direct, Rational(13, 9));
  EXPECT_EQ(r.gamma_formula, Rational(13, 9));
  ASSERT_TRUE(r.A5_enumerated.has_value());
  EXPECT_EQ(*r.A5_enumerated, 24u);
  // the printed closed form has numerator 1040 but denominator 930 rather than 720
  ASSERT_TRUE(r.printed_closed_form.has_value());
  EXPECT_EQ(*r.printed_closed_form, Rational(1040, 930));
  EXPECT_NE(*r.printed_closed_form, r.gamma_direct);
  expect_all_pass(r.checks, "q=5");
  EXPECT_EQ(code_summary(r), "[6,2,5]_5 R=3 mu=2 gamma=13/9≈1.4444");
}

TEST(Density, GridValues) {
  const std::vector<std::tuple<std::uint32_t, std::int64_t, Rational>> want{
      {7, 5, Rational(13, 10)},   {8, 7, Rational(34, 27)},   {9, 9, Rational(172, 135)},
      {11, 15, Rational(32, 27)}, {13, 22, Rational(89, 77)},
  };
  for (const auto& [q, mu, gamma] : want) {
    const CodeSetup s(q, 2);
    const auto r = mu_and_density(s.code, s.census);
    EXPECT_EQ(r.mu_min, mu) << q;
    EXPECT_EQ(r.gamma_direct, gamma) << q;
    expect_all_pass(r.checks, "q=" + std::to_string(q));
  }
  EXPECT_EQ(decimal_suffix(Rational(13, 10)), "=1.3");
}

TEST(Density, TrendDetectsARise) {
  McfReport a, b, c;
  a.q = 5;
  a.gamma_direct = Rational(3, 2);
  b.q = 7;
  b.gamma_direct = Rational(5, 4);
  c.q = 8;
  c.gamma_direct = Rational(6, 5);
  EXPECT_TRUE(all_pass(density_trend({a, b, c})));
  c.gamma_direct = Rational(13, 10);
  const auto t = density_trend({a, b, c});
  EXPECT_FALSE(t[0].pass);
  EXPECT_TRUE(t[1].pass);
  a.gamma_direct = 2;
  EXPECT_FALSE(density_trend({a})[1].pass);
}

TEST(DeepHoles, StructureAndGeometry) {
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    const CodeSetup s(q);
    const std::string where = "q=" + std::to_string(q);
    expect_all_pass(census_checks(s.census), where);
    expect_all_pass(newton_radius_check(s.census), where);
    EXPECT_TRUE(scalar_invariance_check(s.code.field, s.census).pass) << where;
    expect_all_pass(geometric_cross_check(*s.inc.geometry, s.inc.report, s.census), where);
  }
}

TEST(Saturation, CubicIsMinimalSaturating) {
  for (std::uint32_t q : {5u, 7u}) expect_all_pass(verify_saturating(*CodeSetup(q).inc.geometry, true), "q=" + std::to_string(q));
  expect_all_pass(verify_saturating(*CodeSetup(9).inc.geometry, false), "q=9");
}

TEST(Saturation, PlaneSectionDoesNotSpan) {
  const CodeSetup s(5);
  const auto& space = s.inc.geometry->space();
  std::vector<ProjPoint> pts;
  for (auto r : space.points_on(space.plane(0))) pts.push_back(space.point(r));
  const auto res = check_saturating(space, pts, 2);
  EXPECT_FALSE(res.m1);
  EXPECT_FALSE(res.saturating());
}

TEST(Histogram, CsvRows) {
  const CodeSetup s(5);
  std::ostringstream os;
  write_weight_histogram(s.census, os);
  EXPECT_EQ(os.str(), "weight,syndromes\n0,1\n1,24\n2,240\n3,360\n");
}

}  // namespace
