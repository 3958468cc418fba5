#pragma once

/**
 * @file suite.hpp
 * @brief One-call drivers that build the geometry for a field and run every
 *        incidence and code check on it.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twcubic/check.hpp"
#include "twcubic/classify.hpp"
#include "twcubic/covering.hpp"
#include "twcubic/incidence.hpp"

namespace twcubic {

struct SuiteOptions {
  unsigned threads = 1;
  bool minimality = false;
  bool matrix_transpose = false;
  bool code = true;  // ignored below q = 5
};

/// Geometry, partition and incidence report for one field; heap-held so checks can keep references.
struct IncidenceRun {
  std::unique_ptr<CubicGeometry> geometry;
  OrbitPartition partition;
  IncidenceReport report;
};

inline IncidenceRun run_incidence(const Field& f, unsigned threads = 1) {
  IncidenceRun run;
  run.geometry = std::make_unique<CubicGeometry>(f);
  run.partition = partition_space(*run.geometry);
  run.report = full_report(*run.geometry, run.partition, threads);
  return run;
}

/// Table, identity, design, polarity and transpose checks. The polarity line is a skip in characteristic 3.
inline std::vector<CheckResult> incidence_checks(const IncidenceRun& run, const SuiteOptions& opt) {
  const auto& g = *run.geometry;
  std::vector<CheckResult> out;
  append(out, verify_tables(run.report));
  append(out, verify_counting_identities(g, run.report));
  append(out, verify_spot_values(g, run.report));
  for (const auto& d : design_checks(g, run.partition)) out.push_back(to_check(d));
  if (g.xi() != 0)
    append(out, null_polarity_check(g, run.partition));
  else
    out.push_back({"null polarity maps M_i onto N_i", true, "skipped: characteristic 3"});
  append(out, transpose_relations_check(g, run.partition, run.report, opt.matrix_transpose));
  return out;
}

struct CodeRun {
  GdrsCode code;
  SyndromeCensus census;
  McfReport report;
  std::vector<CheckResult> checks;  // census, Newton radius, invariance, geometry, saturation
};

/// The code suite for q >= 5; throws std::invalid_argument below that.
inline CodeRun run_code(const IncidenceRun& inc, const SuiteOptions& opt) {
  const auto& g = *inc.geometry;
  CodeRun run{build_gdrs(g.cubic()), {}, {}, {}};
  run.census = syndrome_census(run.code, opt.threads);
  run.report = mu_and_density(run.code, run.census);
  append(run.checks, census_checks(run.census));
  append(run.checks, newton_radius_check(run.census));
  run.checks.push_back(scalar_invariance_check(g.field(), run.census));
  append(run.checks, geometric_cross_check(g, inc.report, run.census));
  append(run.checks, verify_saturating(g, opt.minimality));
  return run;
}

/// Decimal form of r: "=1.3" when four places are exact, "≈1.4444" otherwise.
inline std::string decimal_suffix(const Rational& r) {
  const Rational scaled = r * 10000;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << r.convert_to<double>();
  std::string digits = os.str();
  if (boost::multiprecision::denominator(scaled) != 1) return "≈" + digits;
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return "=" + digits;
}

/// "[n,k,d]_q R=.. mu=.. gamma=a/b≈x.xxxx"
inline std::string code_summary(const McfReport& r) {
  std::ostringstream os;
  os << '[' << r.n << ',' << r.k << ',' << r.d << "]_" << r.q << " R=" << r.R << " mu=" << r.mu
     << " gamma=" << to_string(r.gamma_direct) << decimal_suffix(r.gamma_direct);
  return os.str();
}

}  // namespace twcubic
