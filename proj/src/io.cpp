#include "reflwb/io.hpp"

#include <fstream>

namespace reflwb {

using nlohmann::json;

namespace {

Rational parse_rational_literal(const json &j) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception &) {
      throw SpecError("bad rational literal \"" + j.get<std::string>() + "\"");
    }
  }
  if (j.is_number_float())
    throw SpecError("floating-point literal " + j.dump() + " is not exact; write it as \"p/q\"");
  throw SpecError("expected a rational literal, got " + j.dump());
}

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw SpecError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json &j, const char *key) {
  const json &v = field(j, key);
  if (!v.is_number_integer())
    throw SpecError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string rational_text(const Rational &q) { return q.get_str(); }

CoxeterType parse_coxeter_type(const std::string &s) {
  if (s == "A")
    return CoxeterType::A;
  if (s == "B")
    return CoxeterType::B;
  if (s == "D")
    return CoxeterType::D;
  if (s == "I2")
    return CoxeterType::I2;
  throw SpecError("unknown Coxeter type \"" + s + "\" (expected A, B, D or I2)");
}

std::string coxeter_type_text(CoxeterType t) {
  switch (t) {
  case CoxeterType::A:
    return "A";
  case CoxeterType::B:
    return "B";
  case CoxeterType::D:
    return "D";
  case CoxeterType::I2:
    return "I2";
  }
  return "?";
}

Matrix parse_matrix(const json &j, int dim, int order) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dim))
    throw SpecError("generator must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json &row = j[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw SpecError("generator row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k)
      m(i, k) = parse_cycnum(row[k], order);
  }
  return m;
}

} // namespace

CycNum parse_cycnum(const json &j, int order) {
  if (j.is_object()) {
    const int m = int_field(j, "order");
    if (m < 1)
      throw SpecError("cyclotomic order must be positive");
    return parse_cycnum(field(j, "coeffs"), m);
  }
  if (j.is_array()) {
    if (order < 1)
      throw SpecError("cyclotomic order must be positive");
    if (j.size() != static_cast<std::size_t>(order))
      throw SpecError("cyclotomic literal " + j.dump() + " needs " + std::to_string(order) + " coefficients");
    std::vector<Rational> coeffs;
    for (const auto &c : j)
      coeffs.push_back(parse_rational_literal(c));
    return CycNum::from_coeffs(order, std::move(coeffs));
  }
  return CycNum(parse_rational_literal(j));
}

json cycnum_to_json(const CycNum &x) {
  if (x.is_rational())
    return rational_text(x.rational_part());
  json coeffs = json::array();
  for (const auto &c : x.coeffs())
    coeffs.push_back(rational_text(c));
  return {{"order", x.order()}, {"coeffs", coeffs}};
}

GroupSpec parse_group_spec(const json &j) {
  if (!j.is_object())
    throw SpecError("group spec must be a JSON object");
  const json &kind_field = field(j, "kind");
  if (!kind_field.is_string())
    throw SpecError("field \"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "imprimitive") {
    ImprimitiveSpec s{int_field(j, "d"), int_field(j, "e"), int_field(j, "r"), std::nullopt};
    if (j.contains("essentialize")) {
      if (!j.at("essentialize").is_boolean())
        throw SpecError("field \"essentialize\" must be a boolean");
      s.essentialize = j.at("essentialize").get<bool>();
    }
    return {s};
  }
  if (kind == "coxeter") {
    const json &t = field(j, "type");
    if (!t.is_string())
      throw SpecError("field \"type\" must be a string");
    return {CoxeterSpec{parse_coxeter_type(t.get<std::string>()), int_field(j, "n")}};
  }
  if (kind == "exceptional") {
    const char *key = j.contains("st") ? "st" : "shephard_todd";
    return {ExceptionalSpec{int_field(j, key)}};
  }
  if (kind == "explicit") {
    ExplicitSpec s;
    s.dim = int_field(j, "dim");
    s.cyclotomic_order = int_field(j, "cyclotomic_order");
    if (s.dim < 1)
      throw SpecError("dim must be positive");
    if (s.cyclotomic_order < 1)
      throw SpecError("cyclotomic_order must be positive");
    const json &gens = field(j, "generators");
    if (!gens.is_array() || gens.empty())
      throw SpecError("generators must be a non-empty array of matrices");
    for (const auto &g : gens)
      s.generators.push_back(parse_matrix(g, s.dim, s.cyclotomic_order));
    return {s};
  }
  if (kind == "product") {
    const json &factors = field(j, "factors");
    if (!factors.is_array() || factors.empty())
      throw SpecError("factors must be a non-empty array of group specs");
    ProductSpec p;
    for (const auto &f : factors)
      p.factors.push_back(parse_group_spec(f));
    return {p};
  }
  throw SpecError("unknown group kind \"" + kind + "\" (expected imprimitive, coxeter, exceptional, explicit, product)");
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw SpecError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw SpecError(path + ": " + e.what());
  }
}

GroupSpec read_group_spec(const std::string &path) { return parse_group_spec(read_json_file(path)); }

json group_spec_to_json(const GroupSpec &spec) {
  return std::visit(
      [](const auto &s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ImprimitiveSpec>) {
          json j{{"kind", "imprimitive"}, {"d", s.d}, {"e", s.e}, {"r", s.r}};
          if (s.essentialize)
            j["essentialize"] = *s.essentialize;
          return j;
        } else if constexpr (std::is_same_v<T, CoxeterSpec>) {
          return {{"kind", "coxeter"}, {"type", coxeter_type_text(s.type)}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, ExceptionalSpec>) {
          return {{"kind", "exceptional"}, {"st", s.shephard_todd}};
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          json gens = json::array();
          for (const auto &m : s.generators) {
            json rows = json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
              json row = json::array();
              for (std::size_t k = 0; k < m.cols(); ++k)
                row.push_back(cycnum_to_json(m(i, k)));
              rows.push_back(row);
            }
            gens.push_back(rows);
          }
          return {{"kind", "explicit"}, {"dim", s.dim}, {"cyclotomic_order", s.cyclotomic_order}, {"generators", gens}};
        } else {
          json factors = json::array();
          for (const auto &f : s.factors)
            factors.push_back(group_spec_to_json(f));
          return {{"kind", "product"}, {"factors", factors}};
        }
      },
      spec.kind);
}

LinearArrangement parse_arrangement(const json &j) {
  const json *forms = &j;
  int order = 1;
  std::optional<std::size_t> dim;
  if (j.is_object()) {
    forms = &field(j, "forms");
    if (j.contains("cyclotomic_order"))
      order = int_field(j, "cyclotomic_order");
    if (j.contains("dim")) {
      const int n = int_field(j, "dim");
      if (n < 1)
        throw SpecError("dim must be positive");
      dim = static_cast<std::size_t>(n);
    }
  }
  if (!forms->is_array() || forms->empty())
    throw SpecError("arrangement needs a non-empty list of covectors");
  LinearArrangement a;
  for (const auto &f : *forms) {
    if (!f.is_array() || f.empty())
      throw SpecError("covector must be a non-empty array");
    if (!dim)
      dim = f.size();
    if (f.size() != *dim)
      throw SpecError("covector " + f.dump() + " has length " + std::to_string(f.size()) + ", expected " +
                      std::to_string(*dim));
    Vector v;
    for (const auto &c : f)
      v.push_back(parse_cycnum(c, order));
    if (is_zero(v))
      throw SpecError("zero covector does not define a hyperplane");
    a.forms.push_back(std::move(v));
  }
  a.dim = *dim;
  return a;
}

LinearArrangement read_arrangement(const std::string &path) { return parse_arrangement(read_json_file(path)); }

} // namespace reflwb
