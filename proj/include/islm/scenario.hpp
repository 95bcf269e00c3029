#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "islm/model.hpp"
#include "islm/parameters.hpp"

namespace islm {

enum class Plot { IsLm, MoneyMarket, GoodsMarket };

std::string_view to_string(Plot plot);
/// Accepts "islm", "money", "goods". Throws UnknownPlot.
Plot parse_plot(std::string_view text);

inline constexpr int kSlotCount = 3;

struct Scenario {
  std::string name;
  Parameters params = Parameters::defaults();
  PolicyRegime regime = PolicyRegime::money_supply_control();
  std::set<Plot> visible_in;

  /// Under interest-rate control the stored M no longer drives the solution.
  bool money_supply_stale() const noexcept { return regime.is_rate_control(); }

  Equilibrium solve() const { return solve_equilibrium(params, regime); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The three parallel model slots. Slots are addressed 1..3.
class ScenarioSet {
 public:
  ScenarioSet();

  const Scenario& slot(int index) const;
  Scenario& slot(int index);
  const std::array<Scenario, kSlotCount>& slots() const noexcept { return slots_; }

  static std::string default_name(int index);

  friend bool operator==(const ScenarioSet&, const ScenarioSet&) = default;

 private:
  std::array<Scenario, kSlotCount> slots_;
};

/// Throws InvalidSlot unless 1 <= index <= 3.
void check_slot(int index);

ScenarioSet create_scenario_set();
/// Copies params and regime of slot-1 into slot (2 or 3).
ScenarioSet assign_from_previous(const ScenarioSet& set, int slot);
/// Restores slot 1 to the defaults. Other slots have no reset target.
ScenarioSet reset_defaults(const ScenarioSet& set, int slot);
/// Slider write. Throws UnknownParameter, OutOfRange or InvalidParameters.
ScenarioSet set_parameter(const ScenarioSet& set, int slot, std::string_view name, double value);
/// Throws InvalidRegime if i_bar is outside the interest-rate slider.
ScenarioSet set_regime(const ScenarioSet& set, int slot, const PolicyRegime& regime);
ScenarioSet set_visibility(const ScenarioSet& set, int slot, Plot plot, bool visible);

struct ComparisonEntry {
  int slot = 0;
  std::string name;
  Equilibrium equilibrium;
};

struct ComparisonDelta {
  int from_slot = 0;
  int to_slot = 0;
  double Y_star = 0;
  double i_star = 0;
  double M_realized = 0;
  GdpComposition composition;
  double budget_balance = 0;
};

struct ComparisonTable {
  std::vector<ComparisonEntry> entries;
  std::vector<ComparisonDelta> deltas;  // consecutive pairs of entries
};

ComparisonTable compare(const ScenarioSet& set, std::span<const int> slots);

enum class CurveKind { IS, LM, MoneyDemand, MoneySupply, AggregateDemand, FortyFiveDegree };

std::string_view to_string(CurveKind kind);

struct CurvePoint {
  double x = 0;
  double y = 0;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CurveSeries {
  CurveKind kind{};
  int slot = 0;
  std::string scenario;
  std::vector<CurvePoint> points;
  friend bool operator==(const CurveSeries&, const CurveSeries&) = default;
};

/// Sampling grid. For the IS-LM and goods plots x is output; for the money
/// market x is real balances.
struct Grid {
  double min = 0;
  double max = 0;
  int n = 0;
  friend bool operator==(const Grid&, const Grid&) = default;
};

inline constexpr int kDefaultGridPoints = 201;

/// Throws InvalidGrid unless min < max (both finite) and n >= 2.
void check_grid(const Grid& grid);

/// Grid covering the equilibria of `slot` and every slot visible in `plot`.
Grid default_grid(const ScenarioSet& set, int slot, Plot plot);

/// Series for one plot of one slot:
///   IsLm        -> IS (Y, is_rate), LM (Y, lm_rate at M_realized) with the kink node inserted
///   MoneyMarket -> MoneyDemand (m, i) floored at zero, MoneySupply vertical at M_realized/P
///   GoodsMarket -> AggregateDemand (Y, ZZ(Y, i*)), FortyFiveDegree (Y, Y)
std::vector<CurveSeries> sample_curves(const ScenarioSet& set, int slot, Plot plot,
                                       const std::optional<Grid>& grid = std::nullopt);

}  // namespace islm
