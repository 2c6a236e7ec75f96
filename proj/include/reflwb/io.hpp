#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "reflwb/arrangement.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/cyclo.hpp"

namespace reflwb {

/// Malformed or unsupported group / arrangement description.
class SpecError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Integer, "p/q" string, array of `order` coefficients, or {"order": m, "coeffs": [...]}.
CycNum parse_cycnum(const nlohmann::json &j, int order);
/// "p/q" for rationals, {"order": m, "coeffs": [...]} otherwise.
nlohmann::json cycnum_to_json(const CycNum &x);

GroupSpec parse_group_spec(const nlohmann::json &j);
GroupSpec read_group_spec(const std::string &path);
nlohmann::json group_spec_to_json(const GroupSpec &spec);

/// {"dim": n, "cyclotomic_order": m, "forms": [[...], ...]} or a bare list of covectors.
LinearArrangement parse_arrangement(const nlohmann::json &j);
LinearArrangement read_arrangement(const std::string &path);

nlohmann::json read_json_file(const std::string &path);

} // namespace reflwb
