#include <json.hpp>

#include "helpers.hpp"

using namespace qsg;

TEST_CASE("harness: the claim catalog") {
  const auto& catalog = suites::claim_catalog();
  REQUIRE(catalog.size() == 11);
  for (std::size_t a = 0; a < catalog.size(); ++a) {
    CHECK(std::string(catalog[a].anchor).size() > 0);
    for (std::size_t b = a + 1; b < catalog.size(); ++b)
      CHECK(std::string(catalog[a].id) != catalog[b].id);
  }
  // C1..C7 asserted, C8..C11 report-only
  for (int k = 1; k <= 11; ++k) {
    const auto* info = suites::find_suite("C" + std::to_string(k));
    REQUIRE(info != nullptr);
    CHECK(info->asserted == (k <= 7));
  }
  CHECK(suites::find_suite("C12") == nullptr);
}

TEST_CASE("harness: registry coverage self-check") {
  CHECK(suites::coverage_gaps().empty());
}

TEST_CASE("harness: suite selection preserves catalog order") {
  CHECK(select_suites({}).size() == 11);
  const auto sel = select_suites({"C4", "C2", "C4"});
  REQUIRE(sel.size() == 2);
  CHECK(std::string(sel[0]->id) == "C2");
  CHECK(std::string(sel[1]->id) == "C4");
  CHECK_THROWS_AS(select_suites({"C0"}), UnknownSuiteError);
}

TEST_CASE("harness: a reduced run passes every asserted suite") {
  RunConfig cfg;
  cfg.samples = 200;
  const RunReport report = run(cfg);
  REQUIRE(report.claims.size() == 11);
  CHECK(report.n_pass == 7);
  CHECK(report.n_fail == 0);
  CHECK(report.n_report_only == 4);
  CHECK(exit_code(report) == 0);
  for (std::size_t k = 0; k < report.claims.size(); ++k)
    CHECK(report.claims[k].claim_id == suites::claim_catalog()[k].id);
}

TEST_CASE("harness: reports are byte-identical across runs") {
  RunConfig cfg;
  cfg.samples = 150;
  cfg.format = ReportFormat::json;
  const std::string a = render(run(cfg), ReportFormat::json);
  const std::string b = render(run(cfg), ReportFormat::json);
  CHECK(a == b);
  CHECK(render(run(cfg), ReportFormat::text) ==
        render(run(cfg), ReportFormat::text));
  CHECK(render(run(cfg), ReportFormat::csv) ==
        render(run(cfg), ReportFormat::csv));
}

TEST_CASE("harness: suite verdicts do not depend on the selection") {
  RunConfig all;
  all.samples = 150;
  RunConfig only;
  only.samples = 150;
  only.suite_ids = {"C2"};
  const RunReport ra = run(all);
  const RunReport rb = run(only);
  REQUIRE(rb.claims.size() == 1);
  CHECK(ra.claims[1] == rb.claims[0]);
}

TEST_CASE("harness: json payload follows the documented schema") {
  RunConfig cfg;
  cfg.samples = 100;
  const RunReport report = run(cfg);
  const nlohmann::json j = nlohmann::json::parse(render_json(report));
  REQUIRE(j.contains("config"));
  REQUIRE(j.contains("claims"));
  REQUIRE(j.contains("summary"));
  CHECK(j["config"]["suites"] == "all");
  CHECK(j["config"]["tolerance"] == 1e-9);
  CHECK(j["config"]["samples"] == 100);
  REQUIRE(j["claims"].is_array());
  REQUIRE(j["claims"].size() == 11);
  for (const auto& c : j["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("paper_ref"));
    CHECK(c.contains("status"));
    CHECK(c.contains("max_residual"));
    CHECK(c.contains("samples"));
    CHECK(c.contains("details"));
  }
  CHECK(j["summary"]["pass"] == 7);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["report_only"] == 4);
  CHECK(j["summary"]["total"] == 11);
}

TEST_CASE("harness: csv and text renderings") {
  RunConfig cfg;
  cfg.samples = 100;
  cfg.suite_ids = {"C1", "C10"};
  const RunReport report = run(cfg);
  const std::string csv = render_csv(report);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 3);  // header + one row per claim
  CHECK(csv.rfind("id,paper_ref,status,max_residual,samples,details", 0) == 0);

  const std::string text = render_text(report);
  CHECK(text.find("C1 ") != std::string::npos);
  CHECK(text.find("summary: 1 pass, 0 fail, 1 report-only") !=
        std::string::npos);
}

TEST_CASE("harness: report-only suites never affect the exit code") {
  RunConfig cfg;
  cfg.samples = 100;
  cfg.suite_ids = {"C8", "C9", "C10", "C11"};
  const RunReport report = run(cfg);
  CHECK(report.n_pass == 0);
  CHECK(report.n_fail == 0);
  CHECK(report.n_report_only == 4);
  CHECK(exit_code(report) == 0);
  for (const auto& c : report.claims) {
    CHECK(c.status == ClaimStatus::report_only);
    CHECK(c.max_residual > 0.0);  // each records a genuine gap
  }
}

TEST_CASE("harness: configuration validation") {
  RunConfig cfg;
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg = RunConfig{};
  cfg.samples = 0;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg = RunConfig{};
  cfg.n_max = 5;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("harness: exit code reflects asserted failures") {
  RunReport synthetic;
  synthetic.n_fail = 1;
  CHECK(exit_code(synthetic) == 1);
  synthetic.n_fail = 0;
  CHECK(exit_code(synthetic) == 0);
}
