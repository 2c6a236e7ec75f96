#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reflwb/catalog.hpp"
#include "reflwb/io.hpp"
#include "reflwb/kappa.hpp"
#include "reflwb/repfamily.hpp"
#include "reflwb/report.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

reflwb::GroupSpec spec_from(const std::string &text) { return reflwb::parse_group_spec(json::parse(text)); }

/// Owns the catalog group so that class functions built from it stay valid.
class Group {
public:
  Group(const std::string &spec_json, std::size_t order_bound)
      : cg_(reflwb::build(spec_from(spec_json), order_bound)) {}

  std::string name() const { return cg_.name; }
  std::size_t order() const { return cg_.group.order(); }
  std::size_t dim() const { return cg_.group.dim(); }
  std::size_t hyperplanes() const { return cg_.arrangement.size(); }
  std::size_t center() const { return cg_.group.center().size(); }
  std::size_t classes() const { return cg_.group.classes().size(); }
  int kappa() const { return reflwb::a_indices(cg_.group, cg_.arrangement).kappa; }
  std::vector<int> indices() const {
    const auto s = reflwb::a_indices(cg_.group, cg_.arrangement).indices;
    return {s.begin(), s.end()};
  }
  std::vector<std::string> chi(long n) const {
    std::vector<std::string> out;
    const auto f = reflwb::chi(cg_.group, cg_.arrangement, n);
    for (const auto &v : f.values())
      out.push_back(v.to_string());
    return out;
  }
  int period() const { return reflwb::check_periodicity(cg_.group, cg_.arrangement); }
  std::string analyze(bool monodromy, std::uint64_t seed) const {
    return reflwb::analyze_report(cg_, monodromy, seed).dump();
  }
  std::string verify(const std::string &suite, std::uint64_t seed) const {
    const auto s = reflwb::parse_suite(suite);
    if (!s)
      throw py::value_error("unknown suite \"" + suite + "\"");
    return reflwb::verify_report(cg_, *s, seed).dump();
  }

private:
  reflwb::CatalogGroup cg_;
};

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for finite complex reflection groups";

  py::register_exception<reflwb::SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<reflwb::NotFiniteError>(m, "NotFiniteError", PyExc_ValueError);

  py::class_<Group>(m, "Group")
      .def(py::init<const std::string &, std::size_t>(), py::arg("spec_json"),
           py::arg("order_bound") = reflwb::kDefaultOrderBound)
      .def_property_readonly("name", &Group::name)
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("dim", &Group::dim)
      .def_property_readonly("hyperplanes", &Group::hyperplanes)
      .def_property_readonly("center", &Group::center)
      .def_property_readonly("classes", &Group::classes)
      .def("kappa", &Group::kappa)
      .def("indices", &Group::indices)
      .def("chi", &Group::chi, py::arg("n"), "chi_n per conjugacy class, as text")
      .def("period", &Group::period)
      .def("analyze_json", &Group::analyze, py::arg("monodromy") = false, py::arg("seed") = 1)
      .def("verify_json", &Group::verify, py::arg("suite") = "all", py::arg("seed") = 1);

  m.def("kappa_formula", &reflwb::kappa_formula, py::arg("d"), py::arg("e"), py::arg("r"));
  m.def(
      "kappa_table_json",
      [](const std::string &family, std::size_t order_bound) {
        const auto f = family.empty() ? reflwb::FamilyRange{} : reflwb::parse_family_range(family);
        return reflwb::kappa_table_report(f, order_bound).dump();
      },
      py::arg("family") = "", py::arg("order_bound") = reflwb::kDefaultOrderBound);
  m.def(
      "poincare_json",
      [](const std::string &arrangement_json) {
        return reflwb::poincare_report(reflwb::parse_arrangement(json::parse(arrangement_json))).dump();
      },
      py::arg("arrangement_json"));
  m.def(
      "render_text", [](const std::string &report_json) { return reflwb::render_text(json::parse(report_json)); },
      py::arg("report_json"));
}
