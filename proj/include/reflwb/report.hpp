#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reflwb/arrangement.hpp"
#include "reflwb/catalog.hpp"

namespace reflwb {

inline constexpr int kReportSchema = 1;

enum class Suite { Phi, Kappa, Chi, Monodromy, All };

std::optional<Suite> parse_suite(const std::string &name);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

nlohmann::json check_to_json(const Check &c);

/// Sections of a report; each is self-contained JSON.
nlohmann::json group_summary(const CatalogGroup &cg);
nlohmann::json phi_section(const CatalogGroup &cg);
nlohmann::json kappa_section(const CatalogGroup &cg);
/// chi_n table for n in [from, to].
nlohmann::json chi_section(const CatalogGroup &cg, long from, long to);
nlohmann::json monodromy_section(const CatalogGroup &cg, std::uint64_t seed);

std::vector<Check> phi_checks(const CatalogGroup &cg);
std::vector<Check> kappa_checks(const CatalogGroup &cg);
std::vector<Check> chi_checks(const CatalogGroup &cg);
std::vector<Check> monodromy_checks(const CatalogGroup &cg, std::uint64_t seed);

nlohmann::json analyze_report(const CatalogGroup &cg, bool monodromy, std::uint64_t seed);
nlohmann::json verify_report(const CatalogGroup &cg, Suite suite, std::uint64_t seed);
nlohmann::json chi_report(const CatalogGroup &cg, long from, long to);
nlohmann::json build_report(const CatalogGroup &cg);
nlohmann::json poincare_report(const LinearArrangement &a);

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct FamilyRange {
  IntRange d{1, 6};
  IntRange e{1, 6};
  IntRange r{2, 3};
  /// Skip members with d * e above this.
  int max_de = 6;
};

/// "a..b,c..d,e..f" (single integers allowed for any range).
FamilyRange parse_family_range(const std::string &text);
nlohmann::json kappa_table_report(const FamilyRange &family, std::size_t order_bound);

/// True when every entry of "checks" passes.
bool report_passed(const nlohmann::json &report);

/// Aligned plain-text rendering; depends only on the JSON.
std::string render_text(const nlohmann::json &report);

} // namespace reflwb
