#pragma once

#include <string>
#include <vector>

#include "nsgp/core.hpp"

namespace nsgp {

enum class ClaimStatus {
  Passed,      // computed value equals the tabulated one
  Failed,      // it does not
  Skipped,     // a hypothesis of the statement fails for this instance
  OutOfPaper,  // computed for information; nothing tabulated to compare with
};

std::string to_string(ClaimStatus status);

struct ClaimResult {
  std::string claim_id;
  std::string subject;
  std::string computed;
  std::string expected;
  std::string note;
  ClaimStatus status = ClaimStatus::Passed;
};

struct ReportSummary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int out_of_paper = 0;
  int total() const { return passed + failed + skipped + out_of_paper; }
};

struct VerificationReport {
  int n_min = 0;
  int n_max = 0;
  std::vector<ClaimResult> claims;
  ReportSummary summary;
  bool all_passed() const { return summary.failed == 0; }
};

// Tabulated claims, loaded from the JSON data file.
struct ClaimTables {
  struct SectionTable {
    std::string id;          // "S3" .. "S8"
    std::vector<int> gens;   // base semigroup generators
    int n_min = 0;           // least odd n for which the table is stable
    // cases[r] lists the offset families at genus 8 + (n-1)/2 - r
    std::vector<std::vector<std::vector<int>>> cases;
  };
  struct SmallNFact {
    std::vector<int> gens;
    int genus = 0;
    std::vector<int> d2_gens;
  };
  struct SmallNDispatch {
    std::string section;
    int n = 0;
    std::vector<int> gens;  // the unique double of genus 12 at this n
  };

  std::vector<std::vector<int>> genus4_census;
  std::vector<SectionTable> sections;
  std::vector<SmallNFact> small_n_facts;
  std::vector<SmallNDispatch> small_n_dispatch;
};

// Empty path means the compiled-in default location.
ClaimTables load_claim_tables(const std::string& path = "");

std::vector<ClaimResult> verify_section2(const ClaimTables& tables, int n_min,
                                         int n_max);
std::vector<ClaimResult> verify_case_tables(const ClaimTables& tables,
                                            int n_min, int n_max);
std::vector<ClaimResult> verify_small_n_facts(const ClaimTables& tables);
std::vector<ClaimResult> verify_main_theorem_coverage(const ClaimTables& tables,
                                                      int n_max);

// Runs every group above for odd n in [n_min, n_max] and sorts by claim id.
// An empty range keeps only the n-independent claims.
VerificationReport build_report(const ClaimTables& tables, int n_min,
                                int n_max);

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace nsgp
