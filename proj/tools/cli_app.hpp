#pragma once

/**
 * @file cli_app.hpp
 * @brief The twcubic command line: tables, verify, code and dump.
 *
 * Exit codes: 0 every executed check passed, 1 a check failed, 2 usage error.
 * Every option can also be set through an environment variable TWCUBIC_<NAME>,
 * e.g. TWCUBIC_Q=7 or TWCUBIC_THREADS=4.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "twcubic/report.hpp"
#include "twcubic/suite.hpp"

namespace twcubic::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

struct RunConfig {
  std::optional<std::uint32_t> q;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> e;
  std::string modulus;  // comma-separated coefficients, constant term first
  std::string format;   // json | csv | markdown; empty selects the command default
  std::string out;
  unsigned threads = 1;
  std::uint64_t cell_ceiling = kDefaultCellCeiling;
  std::uint32_t q_ceiling = 32;
  bool minimality = false;
  bool matrix_transpose = false;
  bool suite = false;
  bool all = false;
  bool rle = false;
  std::string histogram;
  std::vector<int> submatrix;
};

inline const std::vector<std::uint32_t>& default_grid() {
  static const std::vector<std::uint32_t> grid{2, 3, 4, 5, 7, 8, 9, 11, 13};
  return grid;
}

/// Usage problems that survive option parsing (bad q, bad indices, ceilings).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Field field_of(const RunConfig& cfg, std::optional<std::uint32_t> q_override = std::nullopt) {
  if (q_override) return make_field_of_order(*q_override, cfg.q_ceiling);
  if (cfg.q) {
    if (!cfg.modulus.empty()) throw UsageError("--modulus needs --p and --e");
    return make_field_of_order(*cfg.q, cfg.q_ceiling);
  }
  if (!cfg.p || !cfg.e) throw UsageError("give --q, or --p and --e");
  std::optional<std::vector<std::uint32_t>> mod;
  if (!cfg.modulus.empty()) {
    mod.emplace();
    std::stringstream ss(cfg.modulus);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        mod->push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw UsageError("bad modulus coefficient '" + tok + "'");
      }
    }
  }
  return make_field(*cfg.p, *cfg.e, mod, cfg.q_ceiling);
}

inline std::vector<std::optional<std::uint32_t>> targets(const RunConfig& cfg, std::uint32_t min_q = 2) {
  std::vector<std::optional<std::uint32_t>> out;
  if (cfg.suite) {
    for (auto q : default_grid())
      if (q >= min_q) out.emplace_back(q);
  } else {
    out.emplace_back(std::nullopt);
  }
  return out;
}

inline SuiteOptions suite_options(const RunConfig& cfg) {
  SuiteOptions o;
  o.threads = cfg.threads;
  o.minimality = cfg.minimality || cfg.all;
  o.matrix_transpose = cfg.matrix_transpose || cfg.all;
  return o;
}

inline void write_checks(const std::vector<CheckResult>& checks, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    write_checks_csv(checks, os);
  } else if (format == "markdown") {
    os << "| check | result | note |\n|---|---|---|\n";
    for (const auto& c : checks) os << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.witness << " |\n";
  } else {
    write_checks_text(checks, os);
  }
}

inline int first_failure(const std::vector<CheckResult>& checks, std::ostream& err, const std::string& where) {
  for (const auto& c : checks)
    if (!c.pass) {
      err << "verification failed (" << where << "): " << c.name << ": " << c.witness << '\n';
      return kFail;
    }
  return kPass;
}

inline int cmd_tables(const RunConfig& cfg, std::ostream& os, std::ostream&) {
  std::vector<nlohmann::ordered_json> docs;
  for (const auto& q : targets(cfg)) {
    const auto run = run_incidence(field_of(cfg, q), cfg.threads);
    if (cfg.format == "json") {
      docs.push_back(incidence_json(run.report, verify_tables(run.report)));
    } else if (cfg.format == "csv") {
      os << "# q=" << run.report.q << '\n';
      write_table_csv(run.report, os);
    } else {
      write_table_markdown(run.report, os);
      os << '\n';
    }
  }
  if (cfg.format == "json") os << (docs.size() == 1 ? docs[0] : nlohmann::ordered_json(docs)).dump(2) << '\n';
  return kPass;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const auto opt = suite_options(cfg);
  auto runs = nlohmann::ordered_json::array();
  int status = kPass;
  for (const auto& q : targets(cfg)) {
    const auto inc = run_incidence(field_of(cfg, q), cfg.threads);
    const auto checks = incidence_checks(inc, opt);
    std::optional<CodeRun> code;
    if (inc.report.q >= 5) code = run_code(inc, opt);
    const std::string where = "q=" + std::to_string(inc.report.q);
    if (status == kPass) status = first_failure(checks, err, where);
    if (code && status == kPass) status = first_failure(code->report.checks, err, where);
    if (code && status == kPass) status = first_failure(code->checks, err, where);

    if (cfg.format == "json") {
      auto doc = incidence_json(inc.report, checks);
      if (code) doc["code"] = code_json(code->report, code->checks);
      runs.push_back(std::move(doc));
      continue;
    }
    if (cfg.format != "csv") os << "== q=" << inc.report.q << " xi=" << inc.report.xi << '\n';
    auto all = checks;
    if (code) {
      append(all, code->report.checks);
      append(all, code->checks);
    }
    write_checks(all, cfg.format, os);
    if (code && cfg.format.empty()) os << code_summary(code->report) << '\n';
  }
  if (cfg.format == "json") {
    if (runs.size() == 1)
      os << runs[0].dump(2) << '\n';
    else
      os << nlohmann::ordered_json{{"schema_version", kSchemaVersion}, {"runs", runs}}.dump(2) << '\n';
  }
  return status;
}

inline int cmd_code(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const auto opt = suite_options(cfg);
  std::vector<McfReport> reports;
  auto docs = nlohmann::ordered_json::array();
  int status = kPass;
  for (const auto& q : targets(cfg, 5)) {
    const Field f = field_of(cfg, q);
    if (f.q() < 5) throw UsageError("the code suite needs q >= 5 (got q=" + std::to_string(f.q()) + ")");
    const auto inc = run_incidence(f, cfg.threads);
    const auto code = run_code(inc, opt);
    reports.push_back(code.report);
    const std::string where = "q=" + std::to_string(f.q());
    if (status == kPass) status = first_failure(code.report.checks, err, where);
    if (status == kPass) status = first_failure(code.checks, err, where);
    if (!cfg.histogram.empty()) {
      std::ofstream h(cfg.suite ? cfg.histogram + "." + std::to_string(f.q()) + ".csv" : cfg.histogram);
      if (!h) throw UsageError("cannot write " + cfg.histogram);
      write_weight_histogram(code.census, h);
    }
    if (cfg.format == "json") {
      docs.push_back(code_json(code.report, code.checks));
      continue;
    }
    if (cfg.format == "csv") {
      auto all = code.report.checks;
      append(all, code.checks);
      write_checks_csv(all, os);
      continue;
    }
    os << code_summary(code.report) << " D=" << code.report.D << " A5=" << code.report.A5 << '\n';
    if (code.report.printed_closed_form && *code.report.printed_closed_form != code.report.gamma_direct)
      os << "  note: the printed closed-form ratio evaluates to " << to_string(*code.report.printed_closed_form)
         << ", not gamma\n";
    if (cfg.format == "markdown") {
      auto all = code.report.checks;
      append(all, code.checks);
      write_checks(all, cfg.format, os);
    }
  }
  if (cfg.suite) {
    const auto trend = density_trend(reports);
    if (cfg.format != "json") write_checks(trend, cfg.format, os);
    if (status == kPass) status = first_failure(trend, err, "grid");
    if (cfg.format == "json")
      os << nlohmann::ordered_json{{"schema_version", kSchemaVersion}, {"runs", docs}, {"trend", checks_json(trend)}}.dump(2)
         << '\n';
  } else if (cfg.format == "json") {
    os << docs[0].dump(2) << '\n';
  }
  return status;
}

inline int cmd_dump(const RunConfig& cfg, std::ostream& os, std::ostream&) {
  if (cfg.submatrix.size() != 2) throw UsageError("--submatrix takes two indices i j");
  if (!cfg.format.empty() && cfg.format != "csv") throw UsageError("dump writes csv (default) or, with --rle, run-length text");
  const int i = cfg.submatrix[0], j = cfg.submatrix[1];
  if (i < 1 || i > 5 || j < 1 || j > 5)
    throw UsageError("index out of range: submatrix indices must be in 1..5 (got " + std::to_string(i) + " " +
                     std::to_string(j) + ")");
  const auto inc = run_incidence(field_of(cfg), cfg.threads);
  const auto rows = inc.partition.planes[i - 1].size(), cols = inc.partition.points[j - 1].size();
  if (std::uint64_t{rows} * cols > cfg.cell_ceiling)
    throw UsageError("I_" + std::to_string(i) + std::to_string(j) + " has " + std::to_string(rows * cols) +
                     " cells, above the cell ceiling " + std::to_string(cfg.cell_ceiling));
  dump_submatrix(*inc.geometry, inc.partition, i, j, cfg.rle ? DumpFormat::Rle : DumpFormat::Csv, os, cfg.cell_ceiling);
  return kPass;
}

/// Parses argv and runs one command; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Twisted cubic in PG(3,q): orbits, incidence tables and the GDRS covering code", "twcubic"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  auto* q = app.add_option("--q", cfg.q, "Field order q (a prime power)")->envname("TWCUBIC_Q");
  auto* p = app.add_option("--p", cfg.p, "Characteristic p")->envname("TWCUBIC_P");
  app.add_option("--e", cfg.e, "Extension degree e")->envname("TWCUBIC_E")->needs(p);
  app.add_option("--modulus", cfg.modulus, "Monic irreducible modulus, coefficients constant term first (e.g. 1,1,0,1)")
      ->envname("TWCUBIC_MODULUS");
  q->excludes(p);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->envname("TWCUBIC_FORMAT");
  app.add_option("--out", cfg.out, "Output file (default: standard output)")->envname("TWCUBIC_OUT");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u))->envname("TWCUBIC_THREADS");
  app.add_option("--cell-ceiling", cfg.cell_ceiling, "Largest submatrix (rows x cols) that dump will write")
      ->envname("TWCUBIC_CELL_CEILING");
  app.add_option("--q-ceiling", cfg.q_ceiling, "Largest field order accepted")->envname("TWCUBIC_Q_CEILING");
  app.add_flag("--minimality", cfg.minimality, "Also check that C is a minimal (2,mu)-saturating set")
      ->envname("TWCUBIC_MINIMALITY");
  app.add_flag("--matrix-transpose-check", cfg.matrix_transpose, "Check the transpose relations on the matrices")
      ->envname("TWCUBIC_MATRIX_TRANSPOSE_CHECK");
  app.add_flag("--suite", cfg.suite, "Run over q in {2,3,4,5,7,8,9,11,13} (code: q >= 5)")->envname("TWCUBIC_SUITE");

  app.add_subcommand("tables", "Print the 5x5 grid of k_ij/r_ij");
  auto* verify = app.add_subcommand("verify", "Run every check; exit 1 on the first failure");
  verify->add_flag("--all", cfg.all, "Include minimality and matrix-level transpose checks")->envname("TWCUBIC_ALL");
  auto* code = app.add_subcommand("code", "GDRS code parameters, covering radius, mu and gamma");
  code->add_option("--histogram", cfg.histogram, "Write the coset-leader weight histogram as CSV to this file")
      ->envname("TWCUBIC_HISTOGRAM");
  auto* dump = app.add_subcommand("dump", "Write the incidence submatrix I_ij");
  dump->add_option("--submatrix", cfg.submatrix, "Plane orbit i and point orbit j, both 1..5")->expected(2)->required();
  dump->add_flag("--rle", cfg.rle, "Run-length text instead of CSV")->envname("TWCUBIC_RLE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot write " << cfg.out << '\n';
      return kUsage;
    }
  }
  std::ostream& os = cfg.out.empty() ? out : file;
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "tables") return cmd_tables(cfg, os, err);
    if (name == "verify") return cmd_verify(cfg, os, err);
    if (name == "code") return cmd_code(cfg, os, err);
    return cmd_dump(cfg, os, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {  // FieldError and q < 5 for the code
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace twcubic::cli
