#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "hyperholo/config.hpp"
#include "hyperholo/generator_text.hpp"
#include "hyperholo/report.hpp"
#include "hyperholo/verify.hpp"

namespace hyperholo::cli {

inline constexpr int kExitPassed = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"cr", "hyperholomorphic", "cullen", "equivalence", "closure", "fueter"};
  return names;
}

/// A parsed generator with the outcome the run expects from it.
struct GeneratorEntry {
  std::string text;
  ComplexLikePair function;
  bool expect_hyperholomorphic = true;
};

/// Parses generators and expect_fail entries; throws Error(parse) naming the bad token.
inline std::vector<GeneratorEntry> resolve_generators(const RunConfig& config) {
  std::vector<GeneratorEntry> out;
  auto add = [&out](const std::string& text, bool expected) {
    for (auto& e : out) {
      if (e.text == text) {
        e.expect_hyperholomorphic = e.expect_hyperholomorphic && expected;
        return;
      }
    }
    out.push_back({text, parse_generator(text), expected});
  };
  for (const auto& g : config.generators) add(g, true);
  for (const auto& g : config.expect_fail) add(g, false);
  if (out.empty()) {
    throw Error(ErrorKind::config, "no generators selected");
  }
  return out;
}

inline bool suite_selected(const RunConfig& config, const std::string& suite) {
  return std::ranges::find(config.suites, "all") != config.suites.end() ||
         std::ranges::find(config.suites, suite) != config.suites.end();
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Json run_header(const RunConfig& config, const std::string& command) {
  Json header{{"type", "run"}, {"command", command}, {"seed", config.seed}};
  if (config.timestamp) {
    header["timestamp"] = utc_timestamp();
  }
  return header;
}

inline std::string jsonl(const std::vector<Json>& records) {
  std::string out;
  for (const Json& r : records) out += r.dump() + "\n";
  return out;
}

inline std::string slug(const std::string& text) {
  std::string out;
  for (char c : text) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-';
    if (keep) {
      out += c;
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

enum class Expectation { pass, fail, informational };

inline const char* expectation_name(Expectation e) {
  switch (e) {
    case Expectation::pass: return "pass";
    case Expectation::fail: return "fail";
    case Expectation::informational: return "none";
  }
  return "none";
}

/// Runs the residual suites for every generator. Generators listed under
/// expect_fail must fail the CR, operator and Cullen-lemma suites, still pass
/// the equivalence suite, are left out of closure, and report the Fueter
/// theorem suite without judging it. Exit 0 iff every expectation holds.
inline int cmd_verify(const RunConfig& config, std::ostream& log) {
  const auto entries = resolve_generators(config);
  for (const auto& s : config.suites) {
    if (s != "all" && std::ranges::find(verify_suites(), s) == verify_suites().end()) {
      throw Error(ErrorKind::config, "unknown suite '" + s + "'");
    }
  }
  std::vector<Json> records = {run_header(config, "verify")};
  std::vector<SummaryRow> summary;
  bool all_ok = true;

  auto record = [&](const CheckReport& report, Expectation expectation) {
    const bool ok = expectation == Expectation::informational ||
                    report.passed == (expectation == Expectation::pass);
    all_ok = all_ok && ok;
    Json j = to_json(report);
    j["expected"] = expectation_name(expectation);
    j["outcome_ok"] = ok;
    records.push_back(std::move(j));
    summary.push_back({report.name + "[" + report.generator + "]", report.max_abs_residual, report.tolerance,
                       report.passed});
    log << (ok ? "ok    " : "FAIL  ") << report.name << " [" << report.generator << "] max=" << report.max_abs_residual
        << " tol=" << report.tolerance << " expected=" << expectation_name(expectation) << "\n";
  };

  const Tolerances& tol = config.tolerances;
  for (const auto& e : entries) {
    const Expectation criteria = e.expect_hyperholomorphic ? Expectation::pass : Expectation::fail;
    if (suite_selected(config, "cr")) record(cr_check(e.function, config.window, tol), criteria);
    if (suite_selected(config, "hyperholomorphic"))
      record(hyperholomorphic_check(e.function, config.window, tol), criteria);
    if (suite_selected(config, "cullen")) record(cullen_lemma_check(e.function, config.window, tol), criteria);
    if (suite_selected(config, "equivalence"))
      record(equivalence_check(e.function, config.window, tol), Expectation::pass);
    if (suite_selected(config, "fueter"))
      record(fueter_theorem_check(e.function, config.window, tol),
             e.expect_hyperholomorphic ? Expectation::pass : Expectation::informational);
  }
  if (suite_selected(config, "closure")) {
    std::vector<const GeneratorEntry*> members;
    for (const auto& e : entries)
      if (e.expect_hyperholomorphic) members.push_back(&e);
    if (members.size() == 1) {
      record(closure_check(members[0]->function, members[0]->function, config.window, tol), Expectation::pass);
    }
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        record(closure_check(members[a]->function, members[b]->function, config.window, tol), Expectation::pass);
  }

  const std::filesystem::path out(config.output_dir);
  write_file_atomic(out / "verify.jsonl", jsonl(records));
  write_file_atomic(out / "verify_summary.csv", summary_csv(summary));
  return all_ok ? kExitPassed : kExitFailed;
}

/// Integral theorem for every single-valued generator on every region; the
/// right-multiplied form is added for intrinsic generators.
inline int cmd_integral(const RunConfig& config, std::ostream& log) {
  const auto entries = resolve_generators(config);
  validate(config.quadrature);
  for (const auto& e : entries) {
    if (!e.function.single_valued()) {
      throw Error(ErrorKind::not_single_valued, e.text);
    }
  }
  std::vector<Json> records = {run_header(config, "integral")};
  std::vector<SummaryRow> summary;
  bool all_ok = true;
  for (const auto& e : entries) {
    if (!e.expect_hyperholomorphic) continue;
    for (const Region& region : config.regions) {
      std::vector<Side> sides = {Side::left};
      if (e.function.intrinsic()) sides.push_back(Side::right);
      for (Side side : sides) {
        const IntegralReport r = integral_theorem_check(e.function, region, config.quadrature, side, config.tolerances);
        all_ok = all_ok && r.passed;
        records.push_back(to_json(r));
        const std::string name = std::string("integral_") + (side == Side::left ? "left" : "right") + "[" +
                                 e.text + "@" + r.region + "]";
        // rows that vanish by symmetry are judged, and listed, by the absolute floor
        const bool relative = r.rel_diff < r.tolerance || r.abs_diff >= r.abs_tolerance;
        summary.push_back({name, relative ? r.rel_diff : r.abs_diff, relative ? r.tolerance : r.abs_tolerance,
                           r.passed});
        log << (r.passed ? "ok    " : "FAIL  ") << name << " abs=" << r.abs_diff << " rel=" << r.rel_diff
            << " middle_abs=" << r.middle_abs_diff << "\n";
      }
    }
  }
  const std::filesystem::path out(config.output_dir);
  write_file_atomic(out / "integral.jsonl", jsonl(records));
  write_file_atomic(out / "integral_summary.csv", summary_csv(summary));
  return all_ok ? kExitPassed : kExitFailed;
}

/// Mesh refinement study per generator and region; one CSV table each.
inline int cmd_convergence(const RunConfig& config, std::ostream& log) {
  const auto entries = resolve_generators(config);
  if (config.convergence_specs.size() < 2) {
    throw Error(ErrorKind::config, "convergence needs at least two specs");
  }
  std::vector<Json> records = {run_header(config, "convergence")};
  bool all_ok = true;
  const std::filesystem::path out(config.output_dir);
  for (const auto& e : entries) {
    if (!e.expect_hyperholomorphic) continue;
    if (!e.function.single_valued()) throw Error(ErrorKind::not_single_valued, e.text);
    for (const Region& region : config.regions) {
      const ConvergenceStudy study = convergence_study(e.function, region, config.convergence_specs, config.tolerances);
      all_ok = all_ok && study.passed;
      const std::string file = "convergence_" + slug(e.text) + "_" + slug(region_text(region)) + ".csv";
      write_file_atomic(out / file, convergence_csv(study));
      Json rows = Json::array();
      for (const auto& row : study.rows) {
        Json j = to_json(row.report);
        j["ratio"] = real_or_null(row.ratio);
        j["step_passed"] = row.passed;
        rows.push_back(std::move(j));
      }
      records.push_back(Json{{"type", "convergence"},
                             {"generator", e.text},
                             {"region", region_text(region)},
                             {"floor", study.floor},
                             {"min_ratio", study.min_ratio},
                             {"passed", study.passed},
                             {"table", file},
                             {"rows", rows}});
      log << (study.passed ? "ok    " : "FAIL  ") << "convergence [" << e.text << "@" << region_text(region) << "] -> "
          << file << "\n";
    }
  }
  write_file_atomic(out / "convergence.jsonl", jsonl(records));
  return all_ok ? kExitPassed : kExitFailed;
}

/// Divergence-theorem self test on random polynomial fields for every region.
inline int cmd_gauss_selftest(const RunConfig& config, std::ostream& log) {
  std::vector<Json> records = {run_header(config, "gauss-selftest")};
  std::vector<SummaryRow> summary;
  bool all_ok = true;
  for (const Region& region : config.regions) {
    const CheckReport r =
        gauss_selftest(region, config.quadrature, config.gauss_fields, config.gauss_degree, config.seed,
                       config.tolerances);
    all_ok = all_ok && r.passed;
    records.push_back(to_json(r));
    summary.push_back({"gauss[" + region_text(region) + "]", r.max_abs_residual, r.tolerance, r.passed});
    log << (r.passed ? "ok    " : "FAIL  ") << "gauss [" << region_text(region) << "] max_rel=" << r.max_abs_residual
        << "\n";
  }
  const std::filesystem::path out(config.output_dir);
  write_file_atomic(out / "gauss.jsonl", jsonl(records));
  write_file_atomic(out / "gauss_summary.csv", summary_csv(summary));
  return all_ok ? kExitPassed : kExitFailed;
}

inline int cmd_list_generators(std::ostream& os) {
  for (const auto& row : generator_catalogue()) {
    os << row.syntax;
    for (std::size_t pad = row.syntax.size(); pad < 16; ++pad) os << ' ';
    os << row.description << "\n";
  }
  return kExitPassed;
}

}  // namespace hyperholo::cli
