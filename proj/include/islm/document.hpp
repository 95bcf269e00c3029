#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "islm/scenario.hpp"

namespace islm {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Scenario document:
//   { "scenarios": [ { "name": string, "regime": "money_supply" | "interest_rate",
//                      "i_bar": number (iff interest_rate),
//                      "params": { "A", "c", ..., "P": number } } ] }
// One to three entries. Missing params take the default values and missing
// slots are filled with default scenarios. Values are checked against both
// the model invariants and the slider ranges. Other top-level keys are ignored
// so request bodies can carry the document alongside their own fields.

/// Throws DocumentError (kind Syntax) on malformed text.
Json parse_json(std::string_view text);

ScenarioSet scenario_set_from_json(const Json& doc);
ScenarioSet parse_scenario_document(std::string_view text);

OrderedJson scenario_set_to_json(const ScenarioSet& set);
/// Canonical, byte-stable text of a scenario document.
std::string dump_scenario_document(const ScenarioSet& set);

OrderedJson equilibrium_to_json(int slot, const Scenario& scenario, const Equilibrium& eq);
OrderedJson solve_results_to_json(const ScenarioSet& set);
OrderedJson comparison_to_json(const ComparisonTable& table);
OrderedJson curves_to_json(Plot plot, int slot, const Grid& grid,
                           const std::vector<CurveSeries>& series);

/// Canonical rendering shared by the CLI and the API.
std::string dump_structured(const OrderedJson& value);

// Request fields. `path` is the locator used in error messages.
int slot_from_json(const Json& value, const std::string& path);
std::vector<int> slots_from_json(const Json& value, const std::string& path);
Plot plot_from_json(const Json& value, const std::string& path);
/// Missing members take the values of `fallback`.
Grid grid_from_json(const Json& value, const std::string& path, const Grid& fallback);

}  // namespace islm
