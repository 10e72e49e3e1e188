// Acceptance suite: one line per criterion, wall-clock budgets pinned below.
// Exits 0 only if every criterion passes inside its budget.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nsgp/core.hpp"
#include "nsgp/doubling.hpp"
#include "nsgp/genus_tree.hpp"
#include "nsgp/paper_verify.hpp"
#include "nsgp/render.hpp"

#include "doubles_oracle.hpp"
#include "oracle.hpp"

#ifndef NSGP_CLI_PATH
#error "NSGP_CLI_PATH must point at the nsgp binary"
#endif

namespace {

int failures = 0;

// Each criterion returns true on success and may leave an explanation in
// `detail`; going over budget fails the criterion even if the check passed.
template <typename F>
void criterion(const char* id, const char* desc, long budget_ms, F&& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("unexpected exception: ") + e.what();
  }
  const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  if (ok && elapsed_ms > budget_ms) {
    ok = false;
    detail = "over budget: " + std::to_string(elapsed_ms) + " ms > " +
             std::to_string(budget_ms) + " ms";
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ' ' << desc << " ("
            << elapsed_ms << " ms)";
  if (!ok && !detail.empty()) std::cout << ": " << detail;
  std::cout << '\n';
  if (!ok) ++failures;
}

std::string run_cli(const std::string& args, int& exit_code) {
  const std::string cmd = std::string("\"") + NSGP_CLI_PATH + "\" " + args;
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return output;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

bool claims_clean(const nsgp::VerificationReport& report,
                  const std::string& prefix, std::string& detail) {
  int checked = 0;
  for (const auto& c : report.claims) {
    if (c.claim_id.rfind(prefix, 0) != 0) continue;
    ++checked;
    if (c.status == nsgp::ClaimStatus::Failed) {
      detail = c.claim_id + ": computed " + c.computed + ", expected " +
               c.expected;
      return false;
    }
  }
  if (checked == 0) {
    detail = "no claims under prefix " + prefix;
    return false;
  }
  detail = std::to_string(checked) + " claims";
  return true;
}

}  // namespace

int main() {
  const std::vector<std::vector<int>> census_gens = {
      {2, 9}, {3, 5}, {3, 7, 8}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7, 9},
      {5, 6, 7, 8, 9}};

  criterion("C1", "genus-4 census through the CLI", 1000, [&](std::string& d) {
    int rc = 0;
    const std::string out = run_cli("classify --genus 4", rc);
    if (rc != 0) {
      d = "exit code " + std::to_string(rc);
      return false;
    }
    if (out.find("7 semigroups") == std::string::npos) {
      d = "missing census count in: " + out;
      return false;
    }
    for (const auto& gens : census_gens) {
      nsgp::NumericalSemigroup s = nsgp::NumericalSemigroup::from_generators(gens);
      const std::string line = nsgp::render_generators(s);
      if (out.find(line) == std::string::npos) {
        d = "missing " + line;
        return false;
      }
    }
    return true;
  });

  criterion("C2", "closed-form basis, multiplicity and genus of doubles", 1000,
            [&](std::string& d) {
    int checked = 0;
    for (const auto& gens : census_gens) {
      const auto base = nsgp::NumericalSemigroup::from_generators(gens);
      const int m = base.multiplicity();
      const int bar = std::max(base.conductor() + m - 2, 2 * m);
      for (int n = bar + 1 + (bar % 2); n <= 41; n += 2) {
        const auto spec = nsgp::make_double_spec(base, n, {});
        const auto dbl = nsgp::double_of(spec);
        const auto predicted = nsgp::standard_basis_of_double(base, n);
        if (dbl.multiplicity() != 2 * m ||
            dbl.genus() != 2 * base.genus() + (n - 1) / 2 ||
            !(dbl.standard_basis() == predicted)) {
          d = nsgp::render_generators(base) + " at n=" + std::to_string(n);
          return false;
        }
        ++checked;
      }
    }
    d = std::to_string(checked) + " doubles";
    return checked > 0;
  });

  const auto tables = nsgp::load_claim_tables();

  criterion("C3", "structure results for doubles (S2 claims)", 10000,
            [&](std::string& d) {
    const auto report = nsgp::build_report(tables, 9, 41);
    return claims_clean(report, "S2.", d);
  });

  criterion("C4", "per-semigroup case tables (S3-S8 claims)", 30000,
            [&](std::string& d) {
    const auto report = nsgp::build_report(tables, 9, 41);
    for (const char* prefix : {"S3.", "S4.", "S5.", "S6.", "S7.", "S8."}) {
      if (!claims_clean(report, prefix, d)) return false;
    }
    if (!claims_clean(report, "MT.coverage", d)) return false;
    d.clear();
    return true;
  });

  criterion("C5", "small-n generator facts", 2000, [&](std::string& d) {
    const auto results = nsgp::verify_small_n_facts(tables);
    for (const auto& r : results) {
      if (r.status != nsgp::ClaimStatus::Passed) {
        d = r.claim_id;
        return false;
      }
    }
    d = std::to_string(results.size()) + " facts";
    return !results.empty();
  });

  criterion("C6", "independent oracles agree with the fast paths", 60000,
            [&](std::string& d) {
    for (int g = 0; g <= 10; ++g) {
      const auto tree = nsgp::enumerate_by_genus(g).semigroups;
      const auto brute = nsgp::oracle_enumerate_by_genus(g).semigroups;
      if (tree.size() != brute.size()) {
        d = "census size mismatch at genus " + std::to_string(g);
        return false;
      }
      for (std::size_t i = 0; i < tree.size(); ++i)
        if (!(tree[i] == brute[i])) {
          d = "census entry mismatch at genus " + std::to_string(g);
          return false;
        }
    }
    for (const auto& gens : census_gens) {
      const auto base = nsgp::NumericalSemigroup::from_generators(gens);
      for (int n : {9, 11, 13}) {
        const auto brute = doubles_oracle::enumerate(gens, n);
        const int lo = base.genus() + (n - 1) / 2;
        const int hi = 2 * base.genus() + (n - 1) / 2;
        std::map<int, std::vector<std::vector<int>>> fast;
        for (int t = lo - 1; t <= hi + 1; ++t) {
          std::vector<std::vector<int>> families;
          for (const auto& spec : nsgp::enumerate_doubles(base, n, t))
            families.push_back(spec.offsets);
          if (!families.empty()) fast[t] = std::move(families);
        }
        if (fast != brute) {
          d = nsgp::render_generators(base) + " at n=" + std::to_string(n);
          return false;
        }
      }
    }
    return true;
  });

  criterion("C7", "randomized round-trips and invariants", 10000,
            [&](std::string& d) {
    // pool: every numerical semigroup of genus <= 8
    std::vector<nsgp::NumericalSemigroup> pool;
    for (int g = 0; g <= 8; ++g)
      for (auto& s : nsgp::enumerate_by_genus(g).semigroups)
        pool.push_back(std::move(s));

    // symmetric-pairing invariant: below s_max the residue minima of a
    // symmetric semigroup pair up to sum s_max
    for (const auto& s : pool) {
      if (!s.is_symmetric() || s.multiplicity() < 2) continue;
      const auto basis = s.standard_basis();
      for (int v : basis.minima) {
        if (v == basis.largest) continue;
        if (std::find(basis.minima.begin(), basis.minima.end(),
                      basis.largest - v) == basis.minima.end()) {
          d = "pairing failed for " + nsgp::render_generators(s) + " at " +
              std::to_string(v);
          return false;
        }
      }
    }

    // 500 d2-after-double round-trips on randomized realizable specs
    std::mt19937 rng(20250822);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    int trips = 0;
    while (trips < 500) {
      const auto& b = pool[static_cast<std::size_t>(pick(rng))];
      const int g = b.genus();
      int n = b.conductor() + (b.conductor() % 2 == 0 ? 1 : 0) +
              2 * std::uniform_int_distribution<int>(0, 7)(rng);
      const int lo = g + (n - 1) / 2;
      const int hi = 2 * g + (n - 1) / 2;
      const int target = std::uniform_int_distribution<int>(lo, hi)(rng);
      for (const auto& spec : nsgp::enumerate_doubles(b, n, target)) {
        const auto dbl = nsgp::double_of(spec);
        if (dbl.genus() != target || dbl.least_odd() != n ||
            !(nsgp::d2(dbl) == b)) {
          d = "double round-trip failed for " + nsgp::render_generators(b) +
              " at n=" + std::to_string(n) +
              ", genus=" + std::to_string(target);
          return false;
        }
        const auto rebuilt =
            nsgp::NumericalSemigroup::from_generators(dbl.min_generators());
        if (!(rebuilt == dbl)) {
          d = "regeneration failed for " + nsgp::render_generators(dbl);
          return false;
        }
        // closure spot-check on the constructed double
        std::uniform_int_distribution<int> elem(0, dbl.bound());
        for (int probe = 0; probe < 3; ++probe) {
          const int a = elem(rng);
          const int c = elem(rng);
          if (dbl.contains(a) && dbl.contains(c) && !dbl.contains(a + c)) {
            d = "closure failed for " + nsgp::render_generators(dbl);
            return false;
          }
        }
        ++trips;
      }
    }
    d = std::to_string(trips) + " trips";
    return true;
  });

  std::cout << "acceptance: " << (7 - failures) << "/7 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
