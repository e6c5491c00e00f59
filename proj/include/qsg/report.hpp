#pragma once

// Run configuration, suite orchestration and report rendering.
//
// Reports are byte-identical across runs with identical configuration, in
// every format; anything that varies between runs (wall-clock) is emitted on
// the console, never serialised.

#include <chrono>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "qsg/suites.hpp"
#include "qsg/verdict.hpp"

namespace qsg {

enum class ReportFormat { text, json, csv };

inline const char* to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::text:
      return "text";
    case ReportFormat::json:
      return "json";
    default:
      return "csv";
  }
}

struct RunConfig {
  std::vector<std::string> suite_ids;  // empty = all
  double tolerance = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  long samples = 10000;
  int n_max = 4;
  ReportFormat format = ReportFormat::text;
  std::string out_path;  // empty = stdout

  void validate() const {
    if (tolerance <= 0.0)
      throw std::invalid_argument("RunConfig: tolerance must be > 0");
    if (samples < 1)
      throw std::invalid_argument("RunConfig: samples must be >= 1");
    if (n_max < 2 || n_max > 4)
      throw std::invalid_argument("RunConfig: n_max must be in [2, 4]");
  }
};

struct UnknownSuiteError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunReport {
  RunConfig config;
  std::vector<ClaimVerdict> claims;  // catalog order
  int n_pass = 0;
  int n_fail = 0;
  int n_report_only = 0;
};

// Resolves a suite selection against the catalog, preserving catalog order.
inline std::vector<const suites::SuiteInfo*> select_suites(
    const std::vector<std::string>& ids) {
  const auto& catalog = suites::claim_catalog();
  if (ids.empty()) {
    std::vector<const suites::SuiteInfo*> all;
    for (const auto& s : catalog) all.push_back(&s);
    return all;
  }
  std::vector<char> wanted(catalog.size(), 0);
  for (const std::string& id : ids) {
    const suites::SuiteInfo* info = suites::find_suite(id);
    if (info == nullptr) throw UnknownSuiteError("unknown suite id: " + id);
    wanted[static_cast<std::size_t>(info - catalog.data())] = 1;
  }
  std::vector<const suites::SuiteInfo*> sel;
  for (std::size_t k = 0; k < catalog.size(); ++k)
    if (wanted[k]) sel.push_back(&catalog[k]);
  return sel;
}

// Runs the selected suites in catalog order.  `on_suite_done`, when given,
// receives (id, seconds) per suite for console progress.
template <typename Callback = std::nullptr_t>
RunReport run(const RunConfig& config, Callback&& on_suite_done = nullptr) {
  config.validate();
  const SuiteConfig scfg{config.tolerance, config.seed, config.samples,
                         config.n_max};
  RunReport report;
  report.config = config;
  for (const suites::SuiteInfo* info : select_suites(config.suite_ids)) {
    const auto t0 = std::chrono::steady_clock::now();
    ClaimVerdict v = suites::run_suite(*info, scfg);
    const std::chrono::duration<double> dt =
        std::chrono::steady_clock::now() - t0;
    if constexpr (!std::is_same_v<std::decay_t<Callback>, std::nullptr_t>) {
      on_suite_done(info->id, dt.count());
    }
    switch (v.status) {
      case ClaimStatus::pass:
        ++report.n_pass;
        break;
      case ClaimStatus::fail:
        ++report.n_fail;
        break;
      case ClaimStatus::report_only:
        ++report.n_report_only;
        break;
    }
    report.claims.push_back(std::move(v));
  }
  return report;
}

// 0 if no asserted suite failed; report-only suites never affect the code.
inline int exit_code(const RunReport& report) {
  return report.n_fail > 0 ? 1 : 0;
}

namespace detail {
inline nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["suites"] = c.suite_ids.empty()
                    ? nlohmann::ordered_json("all")
                    : nlohmann::ordered_json(c.suite_ids);
  j["tolerance"] = c.tolerance;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["n_max"] = c.n_max;
  j["format"] = to_string(c.format);
  return j;
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}
}  // namespace detail

inline std::string render_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["config"] = detail::config_json(r.config);
  j["claims"] = nlohmann::ordered_json::array();
  for (const ClaimVerdict& v : r.claims) {
    nlohmann::ordered_json c;
    c["id"] = v.claim_id;
    c["paper_ref"] = v.paper_ref;
    c["status"] = to_string(v.status);
    c["max_residual"] = v.max_residual;
    c["samples"] = v.samples;
    c["details"] = v.details;
    j["claims"].push_back(std::move(c));
  }
  j["summary"] = {{"pass", r.n_pass},
                  {"fail", r.n_fail},
                  {"report_only", r.n_report_only},
                  {"total", static_cast<int>(r.claims.size())}};
  return j.dump(2) + "\n";
}

inline std::string render_csv(const RunReport& r) {
  std::string out = "id,paper_ref,status,max_residual,samples,details\n";
  for (const ClaimVerdict& v : r.claims) {
    out += v.claim_id;
    out += ",";
    out += detail::csv_quote(v.paper_ref);
    out += ",";
    out += to_string(v.status);
    out += ",";
    out += format_sci(v.max_residual);
    out += ",";
    out += std::to_string(v.samples);
    out += ",";
    out += detail::csv_quote(v.details);
    out += "\n";
  }
  return out;
}

inline std::string render_text(const RunReport& r) {
  std::string out = "claim verification report\n";
  out += "config: suites=";
  if (r.config.suite_ids.empty()) {
    out += "all";
  } else {
    for (std::size_t k = 0; k < r.config.suite_ids.size(); ++k)
      out += (k ? "," : "") + r.config.suite_ids[k];
  }
  out += " tolerance=" + format_sci(r.config.tolerance) +
         " seed=" + std::to_string(r.config.seed) +
         " samples=" + std::to_string(r.config.samples) +
         " n_max=" + std::to_string(r.config.n_max) + "\n\n";
  for (const ClaimVerdict& v : r.claims) {
    char line[64];
    std::snprintf(line, sizeof(line), "%-4s %-12s max_residual=%s\n",
                  v.claim_id.c_str(), to_string(v.status),
                  format_sci(v.max_residual).c_str());
    out += line;
    out += "     ";
    out += v.paper_ref;
    out += "\n     ";
    out += v.details;
    out += "\n";
  }
  out += "\nsummary: " + std::to_string(r.n_pass) + " pass, " +
         std::to_string(r.n_fail) + " fail, " +
         std::to_string(r.n_report_only) + " report-only\n";
  return out;
}

inline std::string render(const RunReport& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::json:
      return render_json(r);
    case ReportFormat::csv:
      return render_csv(r);
    default:
      return render_text(r);
  }
}

}  // namespace qsg
