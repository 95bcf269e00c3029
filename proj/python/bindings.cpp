#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "islm/document.hpp"
#include "islm/errors.hpp"
#include "islm/model.hpp"
#include "islm/scenario.hpp"

namespace py = pybind11;
using namespace islm;

namespace {

Parameters params_from_kwargs(const py::kwargs& kwargs) {
  ParameterValues values = Parameters::defaults().values();
  for (const auto& [key, value] : kwargs) {
    const auto name_text = py::cast<std::string>(key);
    const auto name = parse_parameter_name(name_text);
    if (!name) throw UnknownParameter("unknown parameter '" + name_text + "'");
    field_ref(values, *name) = py::cast<double>(value);
  }
  return Parameters(values);
}

py::dict params_to_dict(const Parameters& p) {
  py::dict d;
  for (auto name : kAllParameters) d[py::str(std::string(to_string(name)))] = p.get(name);
  return d;
}

std::vector<std::string> diagnostic_names(const Equilibrium& eq) {
  std::vector<std::string> out;
  for (Diagnostic d : eq.diagnostics) out.emplace_back(to_string(d));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "IS-LM equilibrium engine";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidParameters>(m, "InvalidParameters", error);
  py::register_exception<InvalidRegime>(m, "InvalidRegime", error);
  py::register_exception<UnknownParameter>(m, "UnknownParameter", error);
  py::register_exception<OutOfRange>(m, "OutOfRange", error);
  py::register_exception<InvalidSlot>(m, "InvalidSlot", error);
  py::register_exception<EmptySelection>(m, "EmptySelection", error);
  py::register_exception<DuplicateSelection>(m, "DuplicateSelection", error);
  py::register_exception<InvalidGrid>(m, "InvalidGrid", error);
  py::register_exception<UnknownPlot>(m, "UnknownPlot", error);
  py::register_exception<BranchAmbiguous>(m, "BranchAmbiguous", error);
  py::register_exception<DocumentError>(m, "DocumentError", error);

  py::class_<Parameters>(m, "Parameters")
      .def(py::init(&params_from_kwargs),
           "Keyword arguments A, c, T, B, b, pi_e, G, NX, h1, h2, M, P; omitted fields take "
           "the default calibration.")
      .def_static("defaults", &Parameters::defaults)
      .def("get", [](const Parameters& p, const std::string& name) {
        const auto field = parse_parameter_name(name);
        if (!field) throw UnknownParameter("unknown parameter '" + name + "'");
        return p.get(*field);
      })
      .def("replace", [](const Parameters& p, const py::kwargs& kwargs) {
        Parameters next = p;
        for (const auto& [key, value] : kwargs) {
          const auto name_text = py::cast<std::string>(key);
          const auto name = parse_parameter_name(name_text);
          if (!name) throw UnknownParameter("unknown parameter '" + name_text + "'");
          next = next.with(*name, py::cast<double>(value));
        }
        return next;
      })
      .def("to_dict", &params_to_dict)
      .def("__eq__", [](const Parameters& a, const Parameters& b) { return a == b; })
      .def("__repr__", [](const Parameters& p) {
        return "Parameters(" + py::cast<std::string>(py::str(params_to_dict(p))) + ")";
      });

  py::class_<PolicyRegime>(m, "PolicyRegime")
      .def_static("money_supply_control", &PolicyRegime::money_supply_control)
      .def_static("interest_rate_control", &PolicyRegime::interest_rate_control, py::arg("i_bar"))
      .def_property_readonly("is_rate_control", &PolicyRegime::is_rate_control)
      .def_property_readonly("i_bar", [](const PolicyRegime& r) -> std::optional<double> {
        if (!r.is_rate_control()) return std::nullopt;
        return r.i_bar();
      });

  py::class_<GdpComposition>(m, "GdpComposition")
      .def_readonly("C", &GdpComposition::C)
      .def_readonly("I", &GdpComposition::I)
      .def_readonly("G", &GdpComposition::G)
      .def_readonly("NX", &GdpComposition::NX)
      .def("total", &GdpComposition::total);

  py::class_<Equilibrium>(m, "Equilibrium")
      .def_readonly("Y_star", &Equilibrium::Y_star)
      .def_readonly("i_star", &Equilibrium::i_star)
      .def_readonly("r_star", &Equilibrium::r_star)
      .def_readonly("M_realized", &Equilibrium::M_realized)
      .def_readonly("at_zlb", &Equilibrium::at_zlb)
      .def_readonly("composition", &Equilibrium::composition)
      .def_readonly("budget_balance", &Equilibrium::budget_balance)
      .def_property_readonly("diagnostics", &diagnostic_names)
      .def("__repr__", [](const Equilibrium& e) {
        return "Equilibrium(Y_star=" + std::to_string(e.Y_star) +
               ", i_star=" + std::to_string(e.i_star) + ")";
      });

  m.def("consumption", &consumption, py::arg("p"), py::arg("Y"));
  m.def("investment", &investment, py::arg("p"), py::arg("i"));
  m.def("aggregate_demand", &aggregate_demand, py::arg("p"), py::arg("Y"), py::arg("i"));
  m.def("is_output", &is_output, py::arg("p"), py::arg("i"));
  m.def("is_rate", &is_rate, py::arg("p"), py::arg("Y"));
  m.def("money_demand", &money_demand, py::arg("p"), py::arg("Y"), py::arg("i"));
  m.def("lm_rate", &lm_rate, py::arg("p"), py::arg("Y"));
  m.def("lm_kink_output", &lm_kink_output, py::arg("p"));
  m.def("gdp_composition", &gdp_composition, py::arg("p"), py::arg("Y"), py::arg("i"));
  m.def("budget_balance", &budget_balance, py::arg("p"));
  m.def("solve_equilibrium", &solve_equilibrium, py::arg("p"),
        py::arg("regime") = PolicyRegime::money_supply_control());
  m.def("fiscal_multiplier", &fiscal_multiplier, py::arg("p"),
        py::arg("regime") = PolicyRegime::money_supply_control());

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("name", &Scenario::name)
      .def_readonly("params", &Scenario::params)
      .def_readonly("regime", &Scenario::regime)
      .def_property_readonly("money_supply_stale", &Scenario::money_supply_stale)
      .def("solve", &Scenario::solve);

  py::class_<ScenarioSet>(m, "ScenarioSet")
      .def(py::init<>())
      .def("slot", py::overload_cast<int>(&ScenarioSet::slot, py::const_), py::arg("index"))
      .def("__eq__", [](const ScenarioSet& a, const ScenarioSet& b) { return a == b; });

  m.def("create_scenario_set", &create_scenario_set);
  m.def("assign_from_previous", &assign_from_previous, py::arg("set"), py::arg("slot"));
  m.def("reset_defaults", &reset_defaults, py::arg("set"), py::arg("slot") = 1);
  m.def("set_parameter", &set_parameter, py::arg("set"), py::arg("slot"), py::arg("name"),
        py::arg("value"));
  m.def("set_regime", &set_regime, py::arg("set"), py::arg("slot"), py::arg("regime"));

  m.def(
      "compare",
      [](const ScenarioSet& set, const std::vector<int>& slots) {
        return py::module_::import("json").attr("loads")(
            comparison_to_json(compare(set, slots)).dump());
      },
      py::arg("set"), py::arg("slots"), "Comparison table as a dict of entries and deltas.");

  m.def(
      "sample_curves",
      [](const ScenarioSet& set, int slot, const std::string& plot,
         std::optional<std::tuple<double, double, int>> grid) {
        std::optional<Grid> g;
        if (grid) g = Grid{std::get<0>(*grid), std::get<1>(*grid), std::get<2>(*grid)};
        py::list out;
        for (const auto& s : sample_curves(set, slot, parse_plot(plot), g)) {
          py::list points;
          for (const auto& pt : s.points) points.append(py::make_tuple(pt.x, pt.y));
          py::dict d;
          d["curve_kind"] = std::string(to_string(s.kind));
          d["slot"] = s.slot;
          d["scenario"] = s.scenario;
          d["points"] = points;
          out.append(d);
        }
        return out;
      },
      py::arg("set"), py::arg("slot"), py::arg("plot"), py::arg("grid") = py::none(),
      "Curve series for one plot; grid is (min, max, n).");

  m.def("load_scenarios", &parse_scenario_document, py::arg("text"));
  m.def("dump_scenarios", &dump_scenario_document, py::arg("set"));
  m.def(
      "solve_document",
      [](const std::string& text) {
        return dump_structured(solve_results_to_json(parse_scenario_document(text)));
      },
      py::arg("text"), "Solve a scenario document; returns the structured results text.");
}
