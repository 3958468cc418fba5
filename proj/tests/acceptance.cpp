// Acceptance run: one PASS/FAIL line per criterion, sub-claims indented beneath it.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "twcubic/suite.hpp"

using namespace twcubic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  std::string id;
  std::string title;
  std::vector<CheckResult> parts;

  void add(std::string name, bool pass, std::string witness = {}) { parts.push_back({std::move(name), pass, std::move(witness)}); }
  void add(const CheckResult& c, const std::string& prefix) { parts.push_back({prefix + c.name, c.pass, c.witness}); }
  void add_all(const std::vector<CheckResult>& cs, const std::string& prefix) {
    for (const auto& c : cs) add(c, prefix);
  }
  bool pass() const { return all_pass(parts); }
};

void print(const Criterion& c) {
  std::size_t failed = 0;
  for (const auto& p : c.parts) failed += !p.pass;
  std::cout << c.id << ' ' << (c.pass() ? "PASS" : "FAIL") << ' ' << c.title << " (" << c.parts.size() - failed << '/'
            << c.parts.size() << " checks)\n";
  for (const auto& p : c.parts) {
    if (p.pass && c.pass()) continue;
    std::cout << "    " << (p.pass ? "ok   " : "FAIL ") << p.name;
    if (!p.witness.empty()) std::cout << ": " << p.witness;
    std::cout << '\n';
  }
}

std::string qs(std::uint32_t q) { return "q=" + std::to_string(q) + ": "; }

}  // namespace

int main(int argc, char** argv) {
  unsigned threads = 8;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--threads") == 0) threads = static_cast<unsigned>(std::atoi(argv[i + 1]));

  const std::vector<std::uint32_t> grid{2, 3, 4, 5, 7, 8, 9, 11, 13};
  const std::vector<std::uint32_t> code_grid{5, 7, 8, 9, 11, 13};

  // geometry and incidence for every q, timed single-threaded
  std::map<std::uint32_t, IncidenceRun> inc;
  std::map<std::uint32_t, double> build_seconds;
  std::map<std::uint32_t, std::string> build_error;
  for (auto q : grid) {
    const auto t0 = Clock::now();
    try {
      inc.emplace(q, run_incidence(make_field_of_order(q), 1));
    } catch (const std::exception& e) {
      build_error[q] = e.what();
    }
    build_seconds[q] = seconds_since(t0);
  }
  auto have = [&](std::uint32_t q) { return inc.count(q) > 0; };

  std::map<std::uint32_t, CodeRun> code;
  std::map<std::uint32_t, double> code_seconds;
  SuiteOptions opt;
  opt.threads = threads;
  opt.minimality = false;
  for (auto q : code_grid) {
    if (!have(q)) continue;
    const auto t0 = Clock::now();
    try {
      code.emplace(q, run_code(inc.at(q), opt));
    } catch (const std::exception& e) {
      build_error[q] += std::string(" code: ") + e.what();
    }
    code_seconds[q] = seconds_since(t0);
  }

  std::vector<Criterion> all;

  {
    Criterion c{"AC1", "orbit sizes of planes and points", {}};
    for (auto q : code_grid) {
      if (!have(q)) {
        c.add(qs(q) + "geometry", false, build_error[q]);
        continue;
      }
      const auto want = formulas::orbit_sizes(q);
      c.add(expect_eq("plane orbit sizes", inc.at(q).report.sizes.planes, want.planes), qs(q));
      c.add(expect_eq("point orbit sizes", inc.at(q).report.sizes.points, want.points), qs(q));
      c.add(qs(q) + "classification and incidence under 5 s single-threaded", build_seconds[q] < 5.0,
            std::to_string(build_seconds[q]) + " s");
    }
    if (have(7))
      c.add(expect_eq("point orbit sizes (8,56,56,168,112)", inc.at(7).report.sizes.points,
                      std::array<std::int64_t, 5>{8, 56, 56, 168, 112}),
            qs(7));
    all.push_back(c);
  }

  {
    Criterion c{"AC2", "all 25 (k_ij, r_ij) match the tables", {}};
    for (auto q : grid) {
      if (!have(q)) {
        c.add(qs(q) + "geometry", false, build_error[q]);
        continue;
      }
      c.add_all(verify_tables(inc.at(q).report), qs(q));
    }
    all.push_back(c);
  }

  {
    Criterion c{"AC3", "chord lemmas, totals, weighted sums, n2+3n3 and (q+1)^2 identities", {}};
    for (auto q : {5u, 7u, 8u, 9u})
      if (have(q)) c.add_all(verify_counting_identities(*inc.at(q).geometry, inc.at(q).report), qs(q));
    all.push_back(c);
  }

  {
    Criterion c{"AC4", "spot values of n_{d,*}, cube products and square counts", {}};
    for (auto q : code_grid) {
      if (!have(q)) continue;
      const auto& rep = inc.at(q).report;
      const std::int64_t Q = q;
      c.add(expect_eq("n_{2,C} = 2q", rep.n_of_orbit(2, 1), 2 * Q), qs(q));
      if (rep.xi != 0) c.add(expect_eq("n_{2,T} = 2q-1", rep.n_of_orbit(2, 2), 2 * Q - 1), qs(q));
    }
    for (auto q : {7u, 13u})
      if (have(q)) c.add(expect_eq("n_{3,3_Gamma} = (q^2+q+4)/6", inc.at(q).report.n_of_orbit(3, 3), std::int64_t(q * q + q + 4) / 6), qs(q));
    for (auto q : {5u, 8u, 11u})
      if (have(q)) c.add(expect_eq("n_{3,3_Gamma} = (q^2-q+4)/6", inc.at(q).report.n_of_orbit(3, 3), std::int64_t(q * q - q + 4) / 6), qs(q));
    if (have(9)) {
      const auto& rep = inc.at(9).report;
      const std::array<std::int64_t, 4> to{27, 37, 18, 9};
      for (int d = 0; d < 4; ++d)
        c.add(expect_eq("n_{" + std::to_string(d) + ",TO}", rep.n_of_orbit(d, 3), to[d]), qs(9));
    }
    {
      // products of 3-subsets of F_7^*, sorted into cubes and non-cubes directly
      const Field f = make_field_of_order(7);
      std::set<std::uint32_t> cubes;
      for (const auto& x : f.elements())
        if (!x.is_zero()) cubes.insert((x * x * x).encoding());
      std::int64_t mc = 0, mnc = 0;
      for (std::uint32_t a = 1; a < 7; ++a)
        for (std::uint32_t b = a + 1; b < 7; ++b)
          for (std::uint32_t d = b + 1; d < 7; ++d)
            ++(cubes.count((f.element(a) * f.element(b) * f.element(d)).encoding()) ? mc : mnc);
      c.add(expect_eq("(m_c, m_nc) by triple enumeration", std::to_string(mc) + "," + std::to_string(mnc), std::string("8,12")),
            qs(7));
      const auto t = triple_product_class_counts(f);
      c.add(expect_eq("(m_c, m_nc) by the library", std::to_string(t.cubes) + "," + std::to_string(t.non_cubes),
                      std::string("8,12")),
            qs(7));
    }
    for (auto q : {5u, 11u}) {
      const Field f = make_field_of_order(q);
      std::set<std::uint32_t> squares;
      for (const auto& x : f.elements())
        if (!x.is_zero()) squares.insert((x * x).encoding());
      std::int64_t v = 0;
      for (const auto& a : f.elements()) v += squares.count((a * a + a + f.one()).encoding());
      c.add(expect_eq("#V = (q-1)/2", v, std::int64_t(q - 1) / 2), qs(q));
    }
    for (auto q : code_grid)
      if (have(q)) c.add_all(verify_spot_values(*inc.at(q).geometry, inc.at(q).report), qs(q));
    all.push_back(c);
  }

  {
    Criterion c{"AC5", "tactical structure, designs and the null polarity", {}};
    for (auto q : grid) {
      if (!have(q)) continue;
      for (const auto& r : verify_tables(inc.at(q).report))
        if (r.name.find("k_ij #N_i") != std::string::npos || r.name.find("sum_i r_ij") != std::string::npos) c.add(r, qs(q));
    }
    for (auto q : {5u, 7u, 9u}) {
      if (!have(q)) continue;
      for (const auto& d : design_checks(*inc.at(q).geometry, inc.at(q).partition)) c.add(to_check(d), qs(q));
    }
    for (auto q : {5u, 7u, 8u, 11u, 13u})
      if (have(q)) c.add_all(null_polarity_check(*inc.at(q).geometry, inc.at(q).partition), qs(q));
    if (have(9)) {
      bool rejected = false;
      std::string why;
      try {
        null_polarity_check(*inc.at(9).geometry, inc.at(9).partition);
      } catch (const GeometryError& e) {
        rejected = true;
        why = e.what();
      }
      c.add(qs(9) + "null polarity rejected", rejected, why);
    }
    all.push_back(c);
  }

  {
    Criterion c{"AC6", "GDRS code: parameters, R = 3, mu_min, multiplicities, Newton radius", {}};
    const std::map<std::uint32_t, std::int64_t> mu_want{{5, 2}, {7, 5}, {8, 7}, {9, 9}, {11, 15}, {13, 22}};
    for (auto q : code_grid) {
      if (!code.count(q)) {
        c.add(qs(q) + "code suite", false, build_error[q]);
        continue;
      }
      const auto& r = code.at(q).report;
      c.add(expect_eq("[n,k,d]", std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d),
                      std::to_string(q + 1) + "," + std::to_string(q - 3) + ",5"),
            qs(q));
      c.add(expect_eq("mu_min", r.mu_min, mu_want.at(q)), qs(q));
      for (const auto& x : r.checks)
        if (x.name.find("gamma") == std::string::npos) c.add(x, qs(q));
      for (const auto& x : newton_radius_check(code.at(q).census)) c.add(x, qs(q));
      for (const auto& x : census_checks(code.at(q).census)) c.add(x, qs(q));
    }
    if (code.count(13))
      c.add("q=13: code suite under 60 s with " + std::to_string(threads) + " threads", code_seconds[13] < 60.0,
            std::to_string(code_seconds[13]) + " s");
    all.push_back(c);
  }

  {
    Criterion c{"AC7", "mu-density: exact values, strict decrease over the grid, gamma - 1 < 4/q", {}};
    std::vector<McfReport> reports;
    for (auto q : code_grid) {
      if (!code.count(q)) continue;
      const auto& r = code.at(q).report;
      reports.push_back(r);
      c.add(qs(q) + "gamma direct = gamma formula", r.gamma_direct == r.gamma_formula,
            to_string(r.gamma_direct) + " vs " + to_string(r.gamma_formula));
    }
    if (code.count(5)) c.add(expect_eq("gamma", to_string(code.at(5).report.gamma_direct), std::string("13/9")), qs(5));
    if (code.count(7)) c.add(expect_eq("gamma", to_string(code.at(7).report.gamma_direct), std::string("13/10")), qs(7));
    c.add_all(density_trend(reports), "");
    all.push_back(c);
  }

  {
    Criterion c{"AC8", "C is (2,mu)-saturating; minimal for q = 5, 7", {}};
    for (auto q : {5u, 7u, 9u})
      if (have(q)) c.add_all(verify_saturating(*inc.at(q).geometry, q <= 7), qs(q));
    all.push_back(c);
  }

  {
    Criterion c{"AC9", "cross-label consistency, scalar invariance, m(s) = n_3", {}};
    for (auto q : grid) {
      c.add(qs(q) + "chord-type and osculating-count labels agree at every point", have(q), build_error[q]);
      if (!have(q)) continue;
      const auto& g = *inc.at(q).geometry;
      std::size_t bad = 0;
      for (std::size_t r = 0; r < g.space().size(); ++r) {
        if (g.cubic().contains_rank(r)) continue;
        const auto chord = g.chords().type_of_rank(r);
        const int osc = g.osc_count_of_rank(r);
        bool ok;
        if (g.xi() == 0)
          ok = chord == ChordType::Tangent ? (osc == 1 || osc == static_cast<int>(q) + 1) : osc == 1;
        else if (chord == ChordType::Tangent)
          ok = osc == 2;
        else
          ok = (osc == 1) != ((chord == ChordType::RealChord) == (g.xi() == 1));
        bad += !ok;
      }
      c.add(qs(q) + "labelling rules re-derived per point", bad == 0, std::to_string(bad) + " points disagree");
    }
    for (auto q : code_grid)
      if (code.count(q)) c.add(scalar_invariance_check(code.at(q).code.field, code.at(q).census), qs(q));
    for (auto q : {5u, 7u, 9u})
      if (code.count(q)) c.add_all(geometric_cross_check(*inc.at(q).geometry, inc.at(q).report, code.at(q).census), qs(q));
    all.push_back(c);
  }

  std::size_t passed = 0;
  for (const auto& c : all) {
    print(c);
    passed += c.pass();
  }
  std::cout << passed << '/' << all.size() << " criteria pass\n";
  return passed == all.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}
