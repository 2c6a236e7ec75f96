// Command-line front end: reflwb <command> [options]

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reflwb/arrangement.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/io.hpp"
#include "reflwb/monodromy.hpp"
#include "reflwb/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t order_bound = reflwb::kDefaultOrderBound;
  bool monodromy = false;
  std::string spec_path;
  std::string n_range;
  std::string suite = "all";
  std::string family;
};

std::pair<long, long> parse_n_range(const std::string &text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw reflwb::SpecError("--n-range expects a..b, got \"" + text + "\"");
  try {
    std::size_t used = 0;
    const long a = std::stol(text.substr(0, dots), &used);
    if (used != dots)
      throw std::invalid_argument("");
    const std::string tail = text.substr(dots + 2);
    const long b = std::stol(tail, &used);
    if (used != tail.size())
      throw std::invalid_argument("");
    if (a > b)
      throw reflwb::SpecError("--n-range is empty: " + text);
    return {a, b};
  } catch (const std::logic_error &) {
    throw reflwb::SpecError("--n-range expects integers a..b, got \"" + text + "\"");
  }
}

int emit(const nlohmann::json &report, const Options &opt) {
  if (opt.json)
    std::cout << report.dump(2) << '\n';
  else
    std::cout << reflwb::render_text(report);
  if (reflwb::report_passed(report))
    return kExitPass;
  for (const auto &c : report.at("checks"))
    if (!c.at("pass").get<bool>())
      std::cerr << "FAILED: " << c.at("name").get<std::string>() << " (" << c.value("detail", "") << ")\n";
  return kExitCheckFailed;
}

reflwb::CatalogGroup load_group(const Options &opt) {
  return reflwb::build(reflwb::read_group_spec(opt.spec_path), opt.order_bound);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact workbench for finite complex reflection groups and their arrangements", "reflwb"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit the JSON report instead of text");
  app.add_option("--seed", opt.seed, "Seed for the monodromy basepoint and random paths");
  app.add_option("--order-bound", opt.order_bound, "Abort group closure above this many elements")
      ->check(CLI::PositiveNumber);

  auto *analyze = app.add_subcommand("analyze", "Summary, Phi, kappa and chi_n table of a group");
  analyze->add_option("spec", opt.spec_path, "Group spec (JSON)")->required();
  analyze->add_flag("--monodromy", opt.monodromy, "Include numeric monodromy (rank <= 2)");

  auto *kappa_table = app.add_subcommand("kappa-table", "kappa over a range of G(de,e,r) plus the exceptional table");
  kappa_table->add_option("--family", opt.family, "Ranges d,e,r, e.g. 1..3,1..3,2..3");

  auto *chi = app.add_subcommand("chi", "Table of chi_n over a range of n");
  chi->add_option("spec", opt.spec_path, "Group spec (JSON)")->required();
  chi->add_option("--n-range", opt.n_range, "Range a..b (default 0..kappa-1)");

  auto *verify = app.add_subcommand("verify", "Run verification suites; exit 1 on any failed check");
  verify->add_option("spec", opt.spec_path, "Group spec (JSON)")->required();
  verify->add_option("--suite", opt.suite, "phi | kappa | chi | monodromy | all")
      ->check(CLI::IsMember({"phi", "kappa", "chi", "monodromy", "all"}));
  verify->add_flag("--monodromy", opt.monodromy, "Same as --suite monodromy");

  auto *poincare = app.add_subcommand("poincare", "Poincare polynomial and Phi rank of an arrangement");
  poincare->add_option("arrangement", opt.spec_path, "Arrangement (JSON list of covectors)")->required();

  auto *build = app.add_subcommand("build", "Generators, invariant form and hyperplanes of a group");
  build->add_option("spec", opt.spec_path, "Group spec (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*analyze)
      return emit(reflwb::analyze_report(load_group(opt), opt.monodromy, opt.seed), opt);
    if (*kappa_table) {
      const reflwb::FamilyRange family =
          opt.family.empty() ? reflwb::FamilyRange{} : reflwb::parse_family_range(opt.family);
      return emit(reflwb::kappa_table_report(family, opt.order_bound), opt);
    }
    if (*chi) {
      const reflwb::CatalogGroup cg = load_group(opt);
      long from = 0, to = 0;
      if (opt.n_range.empty()) {
        to = reflwb::kappa_section(cg).at("kappa").get<long>() - 1;
      } else {
        std::tie(from, to) = parse_n_range(opt.n_range);
      }
      return emit(reflwb::chi_report(cg, from, to), opt);
    }
    if (*verify) {
      const auto suite = reflwb::parse_suite(opt.monodromy ? "monodromy" : opt.suite);
      return emit(reflwb::verify_report(load_group(opt), *suite, opt.seed), opt);
    }
    if (*poincare)
      return emit(reflwb::poincare_report(reflwb::read_arrangement(opt.spec_path)), opt);
    if (*build)
      return emit(reflwb::build_report(load_group(opt)), opt);
  } catch (const reflwb::SpecError &e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const reflwb::NotFiniteError &e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument &e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::length_error &e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::domain_error &e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const reflwb::PathError &e) {
    std::cerr << "FAILED: monodromy path: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitBadInput;
}
