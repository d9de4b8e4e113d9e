// Python bindings: thin wrappers returning plain dicts/strings so the
// package has no binary-layout coupling with the C++ types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "polyfield/cgroup.hpp"
#include "polyfield/coxeter.hpp"
#include "polyfield/covers.hpp"
#include "polyfield/group.hpp"
#include "polyfield/polytope.hpp"
#include "polyfield/report.hpp"

namespace py = pybind11;
using namespace polyfield;

namespace {

BasicSystem system_of(const std::string& diagram) {
  // accept shorthand like "[4,3,4,3]" or a preset name like "rank6-G"
  if (!diagram.empty() && diagram.front() == '[')
    return build_basic_system(parse_shorthand(diagram));
  return preset(diagram);
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_polyfield, m) {
  m.doc() = "Crystallographic string Coxeter groups over GF(p): reduction, "
            "classification, string C-group tests and polytope invariants.";

  m.def("group_order",
        [](const std::string& diagram, std::uint32_t p) {
          return build_group(system_of(diagram), p).order();
        },
        py::arg("diagram"), py::arg("p"),
        "Order of the reduced reflection group G^p.");

  m.def("classify",
        [](const std::string& diagram, std::uint32_t p) {
          BasicSystem s = system_of(diagram);
          MatGroup g = build_group(s, p);
          ModularSpace sp = ModularSpace::from_basic_system(s, p);
          GroupClassification c = classify(g, sp, s.diagram);
          py::dict d;
          d["order"] = c.order;
          d["dim"] = c.dim;
          d["p"] = c.p;
          d["radical_dim"] = c.radical_dim;
          d["eps"] = c.eps;
          d["disc"] = to_string(c.disc);
          d["tags"] = c.tags;
          d["primary"] = c.primary();
          d["exceptional_overlap"] = c.exceptional_overlap;
          return d;
        },
        py::arg("diagram"), py::arg("p"),
        "Identify G^p among the orthogonal groups of its invariant form.");

  m.def("is_string_cgroup",
        [](const std::string& diagram, std::uint32_t p, std::uint64_t cap) {
          CGroupVerdict v = is_string_cgroup(system_of(diagram), p, cap);
          py::dict d;
          d["is_cgroup"] = v.is_cgroup;
          d["intersection_order"] = v.intersection_order;
          d["expected_order"] = v.expected_order;
          d["witness"] = v.witness;
          return d;
        },
        py::arg("diagram"), py::arg("p"), py::arg("cap") = kDefaultEnumCap,
        "Intersection-property test; a failing verdict carries a witness.");

  m.def("summarize",
        [](const std::string& diagram, std::uint32_t p, std::uint64_t cap) {
          PolytopeSummary s = summarize(system_of(diagram), p, cap);
          py::dict d;
          d["rank"] = s.rank;
          d["schlafli"] = s.schlafli;
          d["f_vector"] = s.f_vector;
          d["flag_count"] = s.flag_count;
          d["petrie_order"] = s.petrie_order;
          d["facet"] = s.facet_id;
          d["vertex_figure"] = s.vertex_figure_id;
          return d;
        },
        py::arg("diagram"), py::arg("p"), py::arg("cap") = kDefaultEnumCap,
        "Polytope invariants of a string C-group (throws otherwise).");

  m.def("analyze",
        [](const std::string& diagram, std::uint32_t p, std::uint64_t cap) {
          RunConfig cfg;
          cfg.max_enum = cap;
          return json_to_py(run_analyze(system_of(diagram), p, cfg));
        },
        py::arg("diagram"), py::arg("p"), py::arg("cap") = kDefaultEnumCap,
        "Full analysis report as a dict (same schema as the CLI).");

  m.def("run_suite",
        [](const std::string& name) { return json_to_py(run_suite(name)); },
        py::arg("name"), "Run a named verification suite; returns the report.");

  m.def("suite_names", []() { return suite_names(); });

  m.def("report_passes",
        [](const py::object& report) {
          py::module_ json = py::module_::import("json");
          std::string text = py::cast<std::string>(json.attr("dumps")(report));
          return report_passes(nlohmann::ordered_json::parse(text));
        },
        py::arg("report"));

  m.def("orthogonal_order", &orthogonal_order, py::arg("dim"), py::arg("p"),
        py::arg("eps"), "|O(dim, p, eps)| by the standard order formulas.");

  m.def("toroid_type",
        [](const std::string& diagram, std::uint32_t p) {
          ToroidType t = toroid_type(system_of(diagram), p);
          py::dict d;
          d["name"] = t.name();
          d["base"] = t.base;
          d["translation_order"] = t.translation_order;
          d["vertex_count"] = t.vertex_count;
          return d;
        },
        py::arg("diagram"), py::arg("p"),
        "Identify the modular toroid of a Euclidean diagram.");

  m.def("petrie",
        [](const std::string& diagram, std::uint32_t p) {
          PetrieData pd = petrie(system_of(diagram), p);
          py::dict d;
          d["order"] = pd.order;
          d["char_poly"] = pd.char_poly;
          d["char_poly_str"] = poly_to_string(pd.char_poly);
          return d;
        },
        py::arg("diagram"), py::arg("p"));

  m.def("duality_check_H",
        [](std::uint32_t p) {
          DualityWitness w = duality_check_H(p);
          py::dict d;
          d["ok"] = w.ok;
          d["needs_extension"] = w.needs_extension;
          d["detail"] = w.detail;
          return d;
        },
        py::arg("p"));

  m.attr("DEFAULT_ENUM_CAP") = kDefaultEnumCap;
}
