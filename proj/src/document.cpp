#include "islm/document.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "islm/errors.hpp"

namespace islm {

namespace {

using Kind = DocumentError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& path, const std::string& message) {
  throw DocumentError(kind, path, message);
}

double number_at(const Json& value, const std::string& path) {
  if (!value.is_number()) fail(Kind::Schema, path, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) fail(Kind::InvalidParameters, path, "must be finite");
  return x;
}

const char* regime_name(const PolicyRegime& regime) {
  return regime.is_rate_control() ? "interest_rate" : "money_supply";
}

Parameters params_from_json(const Json& obj, const std::string& path) {
  if (!obj.is_object()) fail(Kind::Schema, path, "expected an object");
  ParameterValues values = Parameters::defaults().values();
  for (const auto& [key, value] : obj.items()) {
    const std::string field_path = path + "." + key;
    const auto name = parse_parameter_name(key);
    if (!name) fail(Kind::Schema, field_path, "unknown parameter");
    field_ref(values, *name) = number_at(value, field_path);
  }
  try {
    Parameters params(values);
    for (auto name : kAllParameters) check_slider_range(name, params.get(name));
    return params;
  } catch (const InvalidParameters& e) {
    fail(Kind::InvalidParameters, path + "." + e.field(), e.what());
  } catch (const OutOfRange& e) {
    fail(Kind::InvalidParameters, path + "." + e.field(), e.what());
  }
}

PolicyRegime regime_from_json(const Json& entry, const std::string& path) {
  std::string kind = "money_supply";
  if (auto it = entry.find("regime"); it != entry.end()) {
    if (!it->is_string()) fail(Kind::Schema, path + ".regime", "expected a string");
    kind = it->get<std::string>();
  }
  const auto i_bar = entry.find("i_bar");
  if (kind == "money_supply") {
    if (i_bar != entry.end()) {
      fail(Kind::Schema, path + ".i_bar", "only allowed with regime \"interest_rate\"");
    }
    return PolicyRegime::money_supply_control();
  }
  if (kind != "interest_rate") {
    fail(Kind::Schema, path + ".regime", "expected \"money_supply\" or \"interest_rate\"");
  }
  if (i_bar == entry.end()) {
    fail(Kind::Schema, path + ".i_bar", "required with regime \"interest_rate\"");
  }
  const double target = number_at(*i_bar, path + ".i_bar");
  if (!interest_rate_slider_range().contains(target)) {
    const auto r = interest_rate_slider_range();
    fail(Kind::InvalidParameters, path + ".i_bar",
         "interest-rate target must lie in [" + std::to_string(r.lo) + ", " +
             std::to_string(r.hi) + "]");
  }
  return PolicyRegime::interest_rate_control(target);
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Kind::Syntax, "", std::string("malformed JSON: ") + e.what());
  }
}

ScenarioSet scenario_set_from_json(const Json& doc) {
  if (!doc.is_object()) fail(Kind::Schema, "", "expected a JSON object");
  const auto list = doc.find("scenarios");
  if (list == doc.end()) fail(Kind::Schema, "scenarios", "missing");
  if (!list->is_array()) fail(Kind::Schema, "scenarios", "expected an array");
  if (list->empty()) fail(Kind::Schema, "scenarios", "no scenarios");
  if (list->size() > static_cast<std::size_t>(kSlotCount)) {
    fail(Kind::Schema, "scenarios", "at most 3 scenarios allowed");
  }

  ScenarioSet set;
  std::set<std::string> names;
  for (std::size_t k = 0; k < list->size(); ++k) {
    const Json& entry = (*list)[k];
    const std::string path = "scenarios[" + std::to_string(k) + "]";
    if (!entry.is_object()) fail(Kind::Schema, path, "expected an object");
    for (const auto& [key, value] : entry.items()) {
      if (key != "name" && key != "regime" && key != "i_bar" && key != "params") {
        fail(Kind::Schema, path + "." + key, "unknown field");
      }
    }

    Scenario& sc = set.slot(static_cast<int>(k) + 1);
    if (auto it = entry.find("name"); it != entry.end()) {
      if (!it->is_string() || it->get<std::string>().empty()) {
        fail(Kind::Schema, path + ".name", "expected a non-empty string");
      }
      sc.name = it->get<std::string>();
    }
    sc.regime = regime_from_json(entry, path);
    if (auto it = entry.find("params"); it != entry.end()) {
      sc.params = params_from_json(*it, path + ".params");
    }
  }
  for (int k = 1; k <= kSlotCount; ++k) {
    if (!names.insert(set.slot(k).name).second) {
      fail(Kind::Schema, "scenarios[" + std::to_string(k - 1) + "].name",
           "duplicate scenario name '" + set.slot(k).name + "'");
    }
  }
  return set;
}

ScenarioSet parse_scenario_document(std::string_view text) {
  return scenario_set_from_json(parse_json(text));
}

OrderedJson scenario_set_to_json(const ScenarioSet& set) {
  OrderedJson list = OrderedJson::array();
  for (const Scenario& sc : set.slots()) {
    OrderedJson entry;
    entry["name"] = sc.name;
    entry["regime"] = regime_name(sc.regime);
    if (sc.regime.is_rate_control()) entry["i_bar"] = sc.regime.i_bar();
    OrderedJson params;
    for (auto name : kAllParameters) params[std::string(to_string(name))] = sc.params.get(name);
    entry["params"] = std::move(params);
    list.push_back(std::move(entry));
  }
  OrderedJson doc;
  doc["scenarios"] = std::move(list);
  return doc;
}

std::string dump_structured(const OrderedJson& value) { return value.dump(2) + "\n"; }

std::string dump_scenario_document(const ScenarioSet& set) {
  return dump_structured(scenario_set_to_json(set));
}

namespace {

OrderedJson composition_to_json(const GdpComposition& c) {
  OrderedJson out;
  out["C"] = c.C;
  out["I"] = c.I;
  out["G"] = c.G;
  out["NX"] = c.NX;
  return out;
}

}  // namespace

OrderedJson equilibrium_to_json(int slot, const Scenario& sc, const Equilibrium& eq) {
  OrderedJson out;
  out["slot"] = slot;
  out["name"] = sc.name;
  out["regime"] = regime_name(sc.regime);
  if (sc.regime.is_rate_control()) out["i_bar"] = sc.regime.i_bar();
  out["Y_star"] = eq.Y_star;
  out["i_star"] = eq.i_star;
  out["r_star"] = eq.r_star;
  out["M_realized"] = eq.M_realized;
  out["composition"] = composition_to_json(eq.composition);
  out["budget_balance"] = eq.budget_balance;
  out["at_zlb"] = eq.at_zlb;
  out["money_supply_stale"] = sc.money_supply_stale();
  OrderedJson diags = OrderedJson::array();
  for (Diagnostic d : eq.diagnostics) diags.push_back(std::string(to_string(d)));
  out["diagnostics"] = std::move(diags);
  return out;
}

OrderedJson solve_results_to_json(const ScenarioSet& set) {
  OrderedJson results = OrderedJson::array();
  for (int k = 1; k <= kSlotCount; ++k) {
    const Scenario& sc = set.slot(k);
    results.push_back(equilibrium_to_json(k, sc, sc.solve()));
  }
  OrderedJson out;
  out["results"] = std::move(results);
  return out;
}

OrderedJson comparison_to_json(const ComparisonTable& table) {
  OrderedJson out;
  OrderedJson entries = OrderedJson::array();
  for (const auto& e : table.entries) {
    OrderedJson row;
    row["slot"] = e.slot;
    row["name"] = e.name;
    row["Y_star"] = e.equilibrium.Y_star;
    row["i_star"] = e.equilibrium.i_star;
    row["M_realized"] = e.equilibrium.M_realized;
    row["composition"] = composition_to_json(e.equilibrium.composition);
    row["budget_balance"] = e.equilibrium.budget_balance;
    row["at_zlb"] = e.equilibrium.at_zlb;
    entries.push_back(std::move(row));
  }
  OrderedJson deltas = OrderedJson::array();
  for (const auto& d : table.deltas) {
    OrderedJson row;
    row["from_slot"] = d.from_slot;
    row["to_slot"] = d.to_slot;
    row["Y_star"] = d.Y_star;
    row["i_star"] = d.i_star;
    row["M_realized"] = d.M_realized;
    row["composition"] = composition_to_json(d.composition);
    row["budget_balance"] = d.budget_balance;
    deltas.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  out["deltas"] = std::move(deltas);
  return out;
}

OrderedJson curves_to_json(Plot plot, int slot, const Grid& grid,
                           const std::vector<CurveSeries>& series) {
  OrderedJson out;
  out["plot"] = std::string(to_string(plot));
  out["slot"] = slot;
  out["grid"] = {{"min", grid.min}, {"max", grid.max}, {"n", grid.n}};
  OrderedJson list = OrderedJson::array();
  for (const auto& s : series) {
    OrderedJson entry;
    entry["curve_kind"] = std::string(to_string(s.kind));
    entry["slot"] = s.slot;
    entry["scenario"] = s.scenario;
    OrderedJson points = OrderedJson::array();
    for (const auto& pt : s.points) points.push_back({pt.x, pt.y});
    entry["points"] = std::move(points);
    list.push_back(std::move(entry));
  }
  out["series"] = std::move(list);
  return out;
}

int slot_from_json(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(Kind::InvalidSelection, path, "expected an integer slot");
  const auto slot = value.get<long long>();
  if (slot < 1 || slot > kSlotCount) fail(Kind::InvalidSelection, path, "slot must be 1, 2 or 3");
  return static_cast<int>(slot);
}

std::vector<int> slots_from_json(const Json& value, const std::string& path) {
  if (!value.is_array()) fail(Kind::InvalidSelection, path, "expected an array of slots");
  if (value.empty()) fail(Kind::InvalidSelection, path, "empty slot selection");
  std::vector<int> slots;
  for (std::size_t k = 0; k < value.size(); ++k) {
    const int s = slot_from_json(value[k], path + "[" + std::to_string(k) + "]");
    if (std::find(slots.begin(), slots.end(), s) != slots.end()) {
      fail(Kind::InvalidSelection, path + "[" + std::to_string(k) + "]",
           "duplicate slot " + std::to_string(s));
    }
    slots.push_back(s);
  }
  return slots;
}

Plot plot_from_json(const Json& value, const std::string& path) {
  if (!value.is_string()) fail(Kind::UnknownPlot, path, "expected a plot name");
  try {
    return parse_plot(value.get<std::string>());
  } catch (const UnknownPlot& e) {
    fail(Kind::UnknownPlot, path, e.what());
  }
}

Grid grid_from_json(const Json& value, const std::string& path, const Grid& fallback) {
  if (!value.is_object()) fail(Kind::InvalidGrid, path, "expected an object");
  Grid grid = fallback;
  for (const auto& [key, member] : value.items()) {
    const std::string member_path = path + "." + key;
    if (key == "min" || key == "max") {
      if (!member.is_number()) fail(Kind::InvalidGrid, member_path, "expected a number");
      (key == "min" ? grid.min : grid.max) = member.get<double>();
    } else if (key == "n") {
      if (!member.is_number_integer()) fail(Kind::InvalidGrid, member_path, "expected an integer");
      const auto n = member.get<long long>();
      if (n < 2 || n > 1'000'000'000) fail(Kind::InvalidGrid, member_path, "n must be >= 2");
      grid.n = static_cast<int>(n);
    } else {
      fail(Kind::InvalidGrid, member_path, "unknown grid field");
    }
  }
  try {
    check_grid(grid);
  } catch (const InvalidGrid& e) {
    fail(Kind::InvalidGrid, path, e.what());
  }
  return grid;
}

}  // namespace islm
