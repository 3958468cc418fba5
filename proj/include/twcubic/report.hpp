#pragma once

/**
 * @file report.hpp
 * @brief JSON, CSV and markdown renderings of incidence and code reports.
 *
 * Incidence JSON:
 *   {schema_version, q, xi, orbit_sizes: {planes, points}, grid: [{i, j, k, r}], checks}
 * Code JSON:
 *   {schema_version, q, n, k, d, R, mu, D, gamma: {num, den, approx}, A5, checks}
 * A check is {name, pass} plus "witness" when one was recorded.
 */

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "twcubic/check.hpp"
#include "twcubic/covering.hpp"
#include "twcubic/incidence.hpp"

namespace twcubic {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::ordered_json checks_json(const std::vector<CheckResult>& checks) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline nlohmann::ordered_json incidence_json(const IncidenceReport& rep, const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["q"] = rep.q;
  j["xi"] = rep.xi;
  j["orbit_sizes"] = {{"planes", rep.sizes.planes}, {"points", rep.sizes.points}};
  auto grid = nlohmann::ordered_json::array();
  for (int i = 1; i <= 5; ++i)
    for (int k = 1; k <= 5; ++k) {
      const auto& s = rep.cell(i, k);
      nlohmann::ordered_json cell{{"i", i}, {"j", k}, {"k", s.k()}, {"r", s.r()}};
      if (!s.tactical()) cell["witness"] = s.witness;
      grid.push_back(std::move(cell));
    }
  j["grid"] = std::move(grid);
  j["checks"] = checks_json(checks);
  return j;
}

inline nlohmann::ordered_json code_json(const McfReport& r, const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["q"] = r.q;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["R"] = r.R;
  j["mu"] = r.mu;
  j["D"] = r.D;
  j["gamma"] = {{"num", boost::multiprecision::numerator(r.gamma_direct).convert_to<std::int64_t>()},
                {"den", boost::multiprecision::denominator(r.gamma_direct).convert_to<std::int64_t>()},
                {"approx", r.gamma_direct.convert_to<double>()}};
  j["A5"] = r.A5.convert_to<std::int64_t>();
  if (r.A5_enumerated) j["A5_enumerated"] = *r.A5_enumerated;
  if (r.printed_closed_form) j["printed_closed_form"] = to_string(*r.printed_closed_form);
  auto all = r.checks;
  append(all, checks);
  j["checks"] = checks_json(all);
  return j;
}

/// 5×5 grid, rows N_1..N_5, columns M_1..M_5, each cell "k/r".
inline void write_table_markdown(const IncidenceReport& rep, std::ostream& os) {
  os << "q=" << rep.q << ", xi=" << rep.xi << "; cell (N_i, M_j) holds k_ij/r_ij\n\n";
  os << "| |";
  for (int j = 1; j <= 5; ++j) os << " M" << j << " (" << rep.sizes.points[j - 1] << ") |";
  os << "\n|---|";
  for (int j = 1; j <= 5; ++j) os << "---|";
  os << '\n';
  for (int i = 1; i <= 5; ++i) {
    os << "| N" << i << " (" << rep.sizes.planes[i - 1] << ") |";
    for (int j = 1; j <= 5; ++j) {
      const auto& s = rep.cell(i, j);
      if (s.tactical())
        os << ' ' << s.k() << '/' << s.r() << " |";
      else
        os << " " << s.k_min << ".." << s.k_max << '/' << s.r_min << ".." << s.r_max << " |";
    }
    os << '\n';
  }
}

inline void write_table_csv(const IncidenceReport& rep, std::ostream& os) {
  os << "i,j,rows,cols,k,r\n";
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      const auto& s = rep.cell(i, j);
      os << i << ',' << j << ',' << s.rows << ',' << s.cols << ',' << s.k() << ',' << s.r() << '\n';
    }
}

inline bool is_skip(const CheckResult& c) { return c.pass && c.witness.rfind("skipped", 0) == 0; }

/// One line per check: "PASS name", "SKIP name: reason" or "FAIL name: witness".
inline void write_checks_text(const std::vector<CheckResult>& checks, std::ostream& os) {
  for (const auto& c : checks) {
    os << (is_skip(c) ? "SKIP " : c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass || is_skip(c)) os << ": " << c.witness;
    os << '\n';
  }
}

inline void write_checks_csv(const std::vector<CheckResult>& checks, std::ostream& os) {
  os << "name,pass,witness\n";
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + '"';
  };
  for (const auto& c : checks) os << quote(c.name) << ',' << (c.pass ? "true" : "false") << ',' << quote(c.witness) << '\n';
}

}  // namespace twcubic
