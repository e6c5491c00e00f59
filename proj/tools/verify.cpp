// verify: runs the claim suites and writes a report.
//
//   verify [--suites all|C1,C2,...] [--tolerance R] [--seed N] [--samples N]
//          [--n-max N] [--format text|json|csv] [--out PATH]
//   verify claims
//
// Exit codes: 0 success, 1 asserted-suite failure, 2 usage error,
// 3 I/O error.  Per-suite wall-clock goes to stderr so that reports stay
// byte-identical across runs with the same configuration.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qsg/report.hpp"
#include "qsg/suites.hpp"

namespace {

std::vector<std::string> split_ids(const std::string& arg) {
  std::vector<std::string> ids;
  std::string cur;
  for (char ch : arg + ",") {
    if (ch == ',') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return ids;
}

int print_claims() {
  std::printf("%-4s %-9s %s\n", "id", "kind", "claim");
  for (const auto& s : qsg::suites::claim_catalog())
    std::printf("%-4s %-9s %s\n", s.id, s.asserted ? "asserted" : "report",
                s.anchor);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"claim verification harness for the qubit symmetry-group toolkit"};
  app.name("verify");

  std::string suites_arg = "all";
  qsg::RunConfig config;
  std::string format_arg = "text";

  app.add_option("--suites", suites_arg,
                 "suite selection: 'all' or comma-separated ids (e.g. C1,C4)");
  app.add_option("--tolerance", config.tolerance,
                 "classification tolerance for report-only suites");
  app.add_option("--seed", config.seed, "base seed for every suite stream");
  app.add_option("--samples", config.samples, "samples per randomized suite");
  app.add_option("--n-max", config.n_max,
                 "largest register size for tensor suites (2..4)");
  app.add_option("--format", format_arg, "report format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", config.out_path, "report file (default: stdout)");

  CLI::App* claims = app.add_subcommand("claims", "print the claim catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (claims->parsed()) return print_claims();

  if (format_arg == "json") config.format = qsg::ReportFormat::json;
  else if (format_arg == "csv") config.format = qsg::ReportFormat::csv;
  else config.format = qsg::ReportFormat::text;
  if (suites_arg != "all") config.suite_ids = split_ids(suites_arg);

  qsg::RunReport report;
  try {
    report = qsg::run(config, [](const char* id, double seconds) {
      std::fprintf(stderr, "[%s] %.3f s\n", id, seconds);
    });
  } catch (const qsg::UnknownSuiteError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  const std::string payload = qsg::render(report, config.format);
  if (config.out_path.empty()) {
    std::fputs(payload.c_str(), stdout);
  } else {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot open %s for writing\n",
                   config.out_path.c_str());
      return 3;
    }
    out << payload;
    if (!out.good()) {
      std::fprintf(stderr, "error: failed writing %s\n",
                   config.out_path.c_str());
      return 3;
    }
  }
  return qsg::exit_code(report);
}
