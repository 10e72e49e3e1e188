#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "nsgp/core.hpp"
#include "nsgp/paper_verify.hpp"

namespace {

const nsgp::ClaimResult* find_claim(const nsgp::VerificationReport& report,
                                    const std::string& id) {
  for (const auto& c : report.claims)
    if (c.claim_id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("default claim tables load and describe the genus-4 landscape") {
  const auto tables = nsgp::load_claim_tables();
  CHECK(tables.genus4_census.size() == 7);
  REQUIRE(tables.sections.size() == 6);
  CHECK(tables.sections.front().id == "S3");
  CHECK(tables.sections.front().gens == std::vector<int>{3, 5});
  for (const auto& sec : tables.sections) {
    CAPTURE(sec.id);
    CHECK(sec.n_min % 2 == 1);
    CHECK(sec.cases.size() == 5);
    CHECK(sec.cases[0] == std::vector<std::vector<int>>{{}});
  }
  CHECK(tables.small_n_facts.size() == 5);
  CHECK(tables.small_n_dispatch.size() == 4);
}

TEST_CASE("full report over the default window passes everything") {
  const auto tables = nsgp::load_claim_tables();
  const auto report = nsgp::build_report(tables, 9, 41);
  CHECK(report.summary.failed == 0);
  CHECK(report.all_passed());
  CHECK(report.summary.passed > 0);
  CHECK(report.summary.total() == report.claims.size());

  const auto* census = find_claim(report, "S2.census.genus4");
  REQUIRE(census != nullptr);
  CHECK(census->status == nsgp::ClaimStatus::Passed);

  const auto* table_row = find_claim(report, "S3.table.r2.n=13");
  REQUIRE(table_row != nullptr);
  CHECK(table_row->status == nsgp::ClaimStatus::Passed);
  CHECK(table_row->computed == "{[4],[8]}");

  const auto* sweep = find_claim(report, "MT.coverage.sweep");
  REQUIRE(sweep != nullptr);
  CHECK(sweep->status == nsgp::ClaimStatus::Passed);

  // claims come back sorted so reports diff cleanly between runs
  CHECK(std::is_sorted(report.claims.begin(), report.claims.end(),
                       [](const auto& a, const auto& b) {
                         return std::tie(a.claim_id, a.subject) <
                                std::tie(b.claim_id, b.subject);
                       }));
}

TEST_CASE("an empty window reduces to the small-n facts") {
  const auto tables = nsgp::load_claim_tables();
  const auto report = nsgp::build_report(tables, 15, 13);
  CHECK(report.summary.failed == 0);
  CHECK_FALSE(report.claims.empty());
  for (const auto& c : report.claims) {
    CAPTURE(c.claim_id);
    CHECK(c.claim_id.rfind("MT.smalln.", 0) == 0);
  }
}

TEST_CASE("a short window skips the sweep but still passes") {
  const auto tables = nsgp::load_claim_tables();
  const auto report = nsgp::build_report(tables, 9, 13);
  CHECK(report.summary.failed == 0);
  const auto* sweep = find_claim(report, "MT.coverage.sweep");
  REQUIRE(sweep != nullptr);
  CHECK(sweep->status == nsgp::ClaimStatus::Skipped);
}

TEST_CASE("JSON report round-trips and matches the summary") {
  const auto tables = nsgp::load_claim_tables();
  const auto report = nsgp::build_report(tables, 9, 13);
  const auto parsed = nlohmann::json::parse(nsgp::report_to_json(report));
  CHECK(parsed.at("schema_version").get<int>() == 1);
  CHECK(parsed.at("n_min").get<int>() == 9);
  CHECK(parsed.at("n_max").get<int>() == 13);
  CHECK(parsed.at("summary").at("all_passed").get<bool>());
  CHECK(parsed.at("claims").size() == report.summary.total());

  const auto text = nsgp::report_to_text(report);
  CHECK(text.find("result: PASS") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("doctored tables are caught, not smoothed over") {
  auto tables = nsgp::load_claim_tables();

  SUBCASE("wrong family in a case table") {
    tables.sections[0].cases[2] = {{4}, {10}};  // true row is {[4],[8]}
    const auto report = nsgp::build_report(tables, 11, 13);
    CHECK(report.summary.failed > 0);
    CHECK_FALSE(report.all_passed());
    const auto* row = find_claim(report, "S3.table.r2.n=11");
    REQUIRE(row != nullptr);
    CHECK(row->status == nsgp::ClaimStatus::Failed);
  }

  SUBCASE("wrong genus in a small-n fact") {
    tables.small_n_facts[0].genus = 11;
    const auto results = nsgp::verify_small_n_facts(tables);
    bool saw_failure = false;
    for (const auto& r : results)
      if (r.status == nsgp::ClaimStatus::Failed) saw_failure = true;
    CHECK(saw_failure);
  }
}

TEST_CASE("small-n facts all verify on their own") {
  const auto results = nsgp::verify_small_n_facts(nsgp::load_claim_tables());
  CHECK(results.size() == 10);
  for (const auto& r : results) {
    CAPTURE(r.claim_id);
    CHECK(r.status == nsgp::ClaimStatus::Passed);
  }
}

TEST_CASE("loading bad table files reports a clear error") {
  CHECK_THROWS_AS(nsgp::load_claim_tables("/no/such/file.json"), nsgp::Error);

  const auto tmp =
      std::filesystem::temp_directory_path() / "nsgp_bad_tables.json";
  {
    std::ofstream out(tmp);
    out << "{ not valid json";
  }
  CHECK_THROWS_AS(nsgp::load_claim_tables(tmp.string()), nsgp::Error);

  {
    std::ofstream out(tmp);
    out << "{\"schema_version\": 99}";
  }
  CHECK_THROWS_AS(nsgp::load_claim_tables(tmp.string()), nsgp::Error);
  std::filesystem::remove(tmp);
}
