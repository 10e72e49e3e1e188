#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nsgp/core.hpp"
#include "nsgp/doubling.hpp"
#include "nsgp/genus_tree.hpp"
#include "nsgp/paper_verify.hpp"
#include "nsgp/render.hpp"

namespace {

using nlohmann::json;
using namespace nsgp;

int genus_cap_from_env() {
  const char* env = std::getenv("NSGP_MAX_GENUS");
  if (env == nullptr) return kDefaultMaxGenus;
  const std::string s(env);
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (s.empty() || pos != s.size())
    throw Error("NSGP_MAX_GENUS must be an integer, got '" + s + "'");
  return value;
}

json semigroup_json(const NumericalSemigroup& s) {
  json j;
  j["generators"] = s.min_generators();
  j["multiplicity"] = s.multiplicity();
  j["conductor"] = s.conductor();
  if (s.is_full())
    j["frobenius"] = nullptr;
  else
    j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["gaps"] = s.gaps();
  j["symmetric"] = s.is_symmetric();
  j["least_odd"] = s.least_odd();
  if (s.multiplicity() >= 2) {
    const StandardBasis basis = s.standard_basis();
    j["standard_basis"] = basis.sorted_elements();
    j["s_max"] = basis.largest;
  } else {
    j["standard_basis"] = nullptr;
    j["s_max"] = nullptr;
  }
  return j;
}

void print_semigroup(const NumericalSemigroup& s) {
  std::cout << "semigroup " << render_generators(s) << '\n';
  std::cout << "multiplicity " << s.multiplicity() << '\n';
  std::cout << "conductor " << s.conductor() << '\n';
  if (s.is_full())
    std::cout << "frobenius none\n";
  else
    std::cout << "frobenius " << s.frobenius() << '\n';
  std::cout << "genus " << s.genus() << '\n';
  std::cout << "gaps " << render_int_list(s.gaps()) << '\n';
  std::cout << "symmetric " << (s.is_symmetric() ? "yes" : "no") << '\n';
  std::cout << "least odd " << s.least_odd() << '\n';
  if (s.multiplicity() >= 2) {
    const StandardBasis basis = s.standard_basis();
    std::cout << "standard basis " << render_basis(basis) << '\n';
    std::cout << "s_max " << basis.largest << '\n';
  }
}

void emit(json j, const std::string& format) {
  if (format == "json") {
    j["schema_version"] = 1;
    std::cout << j.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"doubles of numerical semigroups of genus 4"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::vector<int> gens;
  int n = 0;
  std::vector<int> offsets;
  int genus = 0;
  std::string tables_path;
  int n_min = 9;
  int n_max = 41;
  std::string out_path;

  CLI::App* info = app.add_subcommand("info", "describe one semigroup");
  info->add_option("--gens", gens, "generators, comma separated")
      ->required()
      ->delimiter(',');

  CLI::App* classify =
      app.add_subcommand("classify", "list all semigroups of one genus");
  classify->add_option("--genus", genus, "target genus")->required();

  CLI::App* dbl = app.add_subcommand(
      "double", "build a double from base, least odd element and offsets");
  dbl->add_option("--gens", gens, "base generators")->required()->delimiter(
      ',');
  dbl->add_option("--n", n, "least odd element")->required();
  dbl->add_option("--offsets", offsets, "odd generator offsets")
      ->delimiter(',');

  CLI::App* half = app.add_subcommand("d2", "halve the even part");
  half->add_option("--gens", gens, "generators")->required()->delimiter(',');

  CLI::App* enumerate = app.add_subcommand(
      "enumerate-doubles", "all doubles with given least odd element and genus");
  enumerate->add_option("--gens", gens, "base generators")
      ->required()
      ->delimiter(',');
  enumerate->add_option("--n", n, "least odd element")->required();
  enumerate->add_option("--genus", genus, "target genus")->required();

  CLI::App* verify =
      app.add_subcommand("verify-paper", "check every tabulated claim");
  verify->add_option("--tables", tables_path, "claim tables file");
  verify->add_option("--n-min,--min-n", n_min, "first n of the sweep")
      ->capture_default_str()
      ->check(CLI::Range(1, 199));
  verify->add_option("--n-max,--max-n", n_max, "last n of the sweep (odd)")
      ->capture_default_str()
      ->check(CLI::Range(9, 199));
  verify->add_option("--out", out_path, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) {
      const NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
      if (format == "text")
        print_semigroup(s);
      else
        emit(semigroup_json(s), format);
    } else if (classify->parsed()) {
      const GenusCensus census = enumerate_by_genus(genus, genus_cap_from_env());
      if (format == "text") {
        std::cout << "genus " << census.genus << ": "
                  << census.semigroups.size() << " semigroups\n";
        for (const auto& s : census.semigroups)
          std::cout << render_generators(s) << '\n';
      } else {
        json j;
        j["genus"] = census.genus;
        j["count"] = census.semigroups.size();
        json list = json::array();
        for (const auto& s : census.semigroups)
          list.push_back(s.min_generators());
        j["semigroups"] = std::move(list);
        emit(std::move(j), format);
      }
    } else if (dbl->parsed()) {
      const NumericalSemigroup base =
          NumericalSemigroup::from_generators(gens);
      const DoubleSpec spec = make_double_spec(base, n, offsets);
      const NumericalSemigroup d = double_of(spec);
      if (format == "text") {
        std::cout << "double of " << render_generators(base) << ", least odd "
                  << spec.least_odd << ", offsets "
                  << render_int_list(spec.offsets) << '\n';
        print_semigroup(d);
      } else {
        json j = semigroup_json(d);
        j["base"] = base.min_generators();
        j["least_odd"] = spec.least_odd;
        j["offsets"] = spec.offsets;
        emit(std::move(j), format);
      }
    } else if (half->parsed()) {
      const NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
      const NumericalSemigroup d = d2(s);
      if (format == "text") {
        std::cout << "d2 of " << render_generators(s) << '\n';
        print_semigroup(d);
      } else {
        json j = semigroup_json(d);
        j["input"] = s.min_generators();
        emit(std::move(j), format);
      }
    } else if (enumerate->parsed()) {
      const NumericalSemigroup base =
          NumericalSemigroup::from_generators(gens);
      const auto found = enumerate_doubles(base, n, genus);
      if (format == "text") {
        std::cout << "doubles of " << render_generators(base)
                  << ", least odd " << n << ", genus " << genus << ": "
                  << found.size() << (found.size() == 1 ? " case" : " cases")
                  << '\n';
        for (const auto& f : found)
          std::cout << render_int_list(f.offsets) << '\n';
      } else {
        json j;
        j["base"] = base.min_generators();
        j["least_odd"] = n;
        j["target_genus"] = genus;
        j["count"] = found.size();
        json list = json::array();
        for (const auto& f : found) list.push_back(f.offsets);
        j["offsets"] = std::move(list);
        emit(std::move(j), format);
      }
    } else if (verify->parsed()) {
      if (n_max % 2 == 0)
        throw Error("--n-max must be odd, got " + std::to_string(n_max));
      const ClaimTables tables = load_claim_tables(tables_path);
      const VerificationReport rep = build_report(tables, n_min, n_max);
      const std::string body =
          format == "json" ? report_to_json(rep) : report_to_text(rep);
      std::cout << body;
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot write " + out_path);
        f << body;
      }
      return rep.all_passed() ? 0 : 1;
    }
    return 0;
  } catch (const NotRealizable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const NotMinimal& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const EmptyGenerators& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NonCofinite& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InvalidGenerator& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
