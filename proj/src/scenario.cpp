#include "islm/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "islm/errors.hpp"

namespace islm {

std::string_view to_string(Plot plot) {
  switch (plot) {
    case Plot::IsLm: return "islm";
    case Plot::MoneyMarket: return "money";
    case Plot::GoodsMarket: return "goods";
  }
  return "?";
}

Plot parse_plot(std::string_view text) {
  for (Plot plot : {Plot::IsLm, Plot::MoneyMarket, Plot::GoodsMarket}) {
    if (to_string(plot) == text) return plot;
  }
  throw UnknownPlot("unknown plot '" + std::string(text) + "' (expected islm, money or goods)");
}

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::IS: return "IS";
    case CurveKind::LM: return "LM";
    case CurveKind::MoneyDemand: return "MoneyDemand";
    case CurveKind::MoneySupply: return "MoneySupply";
    case CurveKind::AggregateDemand: return "AggregateDemand";
    case CurveKind::FortyFiveDegree: return "FortyFiveDegree";
  }
  return "?";
}

void check_slot(int index) {
  if (index < 1 || index > kSlotCount) {
    throw InvalidSlot("slot must be 1, 2 or 3, got " + std::to_string(index));
  }
}

ScenarioSet::ScenarioSet() {
  for (int k = 1; k <= kSlotCount; ++k) slots_[k - 1].name = default_name(k);
  slots_[0].visible_in = {Plot::IsLm, Plot::MoneyMarket, Plot::GoodsMarket};
}

const Scenario& ScenarioSet::slot(int index) const {
  check_slot(index);
  return slots_[index - 1];
}

Scenario& ScenarioSet::slot(int index) {
  check_slot(index);
  return slots_[index - 1];
}

std::string ScenarioSet::default_name(int index) { return "Model " + std::to_string(index); }

ScenarioSet create_scenario_set() { return ScenarioSet(); }

ScenarioSet assign_from_previous(const ScenarioSet& set, int slot) {
  check_slot(slot);
  if (slot == 1) {
    throw InvalidSlot("slot 1 has no previous slot; use reset_defaults to restore it");
  }
  ScenarioSet next = set;
  next.slot(slot).params = set.slot(slot - 1).params;
  next.slot(slot).regime = set.slot(slot - 1).regime;
  return next;
}

ScenarioSet reset_defaults(const ScenarioSet& set, int slot) {
  check_slot(slot);
  if (slot != 1) {
    throw InvalidSlot("only slot 1 resets to defaults; slots 2 and 3 copy the previous slot");
  }
  ScenarioSet next = set;
  next.slot(1).params = Parameters::defaults();
  next.slot(1).regime = PolicyRegime::money_supply_control();
  return next;
}

ScenarioSet set_parameter(const ScenarioSet& set, int slot, std::string_view name, double value) {
  check_slot(slot);
  const auto field = parse_parameter_name(name);
  if (!field) throw UnknownParameter("unknown parameter '" + std::string(name) + "'");
  check_slider_range(*field, value);
  ScenarioSet next = set;
  next.slot(slot).params = set.slot(slot).params.with(*field, value);
  return next;
}

ScenarioSet set_regime(const ScenarioSet& set, int slot, const PolicyRegime& regime) {
  check_slot(slot);
  if (regime.is_rate_control() && !interest_rate_slider_range().contains(regime.i_bar())) {
    const auto r = interest_rate_slider_range();
    throw InvalidRegime("interest-rate target " + std::to_string(regime.i_bar()) +
                        " outside [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
  }
  ScenarioSet next = set;
  next.slot(slot).regime = regime;
  return next;
}

ScenarioSet set_visibility(const ScenarioSet& set, int slot, Plot plot, bool visible) {
  ScenarioSet next = set;
  auto& shown = next.slot(slot).visible_in;
  if (visible) {
    shown.insert(plot);
  } else {
    shown.erase(plot);
  }
  return next;
}

ComparisonTable compare(const ScenarioSet& set, std::span<const int> slots) {
  if (slots.empty()) throw EmptySelection("no slots selected");
  std::vector<int> order(slots.begin(), slots.end());
  for (int s : order) check_slot(s);
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
    throw DuplicateSelection("slot selection contains duplicates");
  }

  ComparisonTable table;
  for (int s : order) {
    const Scenario& sc = set.slot(s);
    table.entries.push_back({s, sc.name, sc.solve()});
  }
  for (std::size_t k = 1; k < table.entries.size(); ++k) {
    const Equilibrium& a = table.entries[k - 1].equilibrium;
    const Equilibrium& b = table.entries[k].equilibrium;
    table.deltas.push_back(ComparisonDelta{
        .from_slot = table.entries[k - 1].slot,
        .to_slot = table.entries[k].slot,
        .Y_star = b.Y_star - a.Y_star,
        .i_star = b.i_star - a.i_star,
        .M_realized = b.M_realized - a.M_realized,
        .composition = {.C = b.composition.C - a.composition.C,
                        .I = b.composition.I - a.composition.I,
                        .G = b.composition.G - a.composition.G,
                        .NX = b.composition.NX - a.composition.NX},
        .budget_balance = b.budget_balance - a.budget_balance,
    });
  }
  return table;
}

void check_grid(const Grid& grid) {
  if (!std::isfinite(grid.min) || !std::isfinite(grid.max)) {
    throw InvalidGrid("grid bounds must be finite");
  }
  if (!(grid.min < grid.max)) throw InvalidGrid("grid requires min < max");
  if (grid.n < 2) throw InvalidGrid("grid requires n >= 2");
}

namespace {

// Scale of the plot's x axis at one slot's equilibrium.
double axis_extent(const Scenario& sc, Plot plot) {
  const Equilibrium eq = sc.solve();
  if (plot == Plot::MoneyMarket) {
    return std::max(sc.params.h1() * eq.Y_star, eq.M_realized / sc.params.P());
  }
  return eq.Y_star;
}

std::vector<double> grid_nodes(const Grid& grid) {
  std::vector<double> xs(static_cast<std::size_t>(grid.n));
  const double span = grid.max - grid.min;
  for (int k = 0; k < grid.n; ++k) {
    xs[static_cast<std::size_t>(k)] = grid.min + span * k / (grid.n - 1);
  }
  xs.back() = grid.max;
  return xs;
}

std::vector<double> with_node(std::vector<double> xs, double node, const Grid& grid) {
  if (node > grid.min && node < grid.max && !std::binary_search(xs.begin(), xs.end(), node)) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), node), node);
  }
  return xs;
}

template <class F>
CurveSeries make_series(CurveKind kind, int slot, const Scenario& sc,
                        const std::vector<double>& xs, F&& f) {
  CurveSeries s{kind, slot, sc.name, {}};
  s.points.reserve(xs.size());
  for (double x : xs) s.points.push_back({x, f(x)});
  return s;
}

}  // namespace

Grid default_grid(const ScenarioSet& set, int slot, Plot plot) {
  check_slot(slot);
  double hi = axis_extent(set.slot(slot), plot);
  double lo = hi;
  for (int k = 1; k <= kSlotCount; ++k) {
    const Scenario& sc = set.slot(k);
    if (k == slot || !sc.visible_in.contains(plot)) continue;
    const double e = axis_extent(sc, plot);
    hi = std::max(hi, e);
    lo = std::min(lo, e);
  }
  if (hi > 0) return {0, 2 * hi, kDefaultGridPoints};
  if (lo < 0) return {2 * lo, 0, kDefaultGridPoints};
  return {0, 1, kDefaultGridPoints};
}

std::vector<CurveSeries> sample_curves(const ScenarioSet& set, int slot, Plot plot,
                                       const std::optional<Grid>& grid_arg) {
  check_slot(slot);
  const Grid grid = grid_arg ? *grid_arg : default_grid(set, slot, plot);
  check_grid(grid);

  const Scenario& sc = set.slot(slot);
  const Parameters& p = sc.params;
  const Equilibrium eq = sc.solve();
  const std::vector<double> xs = grid_nodes(grid);

  std::vector<CurveSeries> out;
  switch (plot) {
    case Plot::IsLm: {
      out.push_back(make_series(CurveKind::IS, slot, sc, xs,
                                [&](double Y) { return is_rate(p, Y); }));
      // Under interest-rate control the LM curve is drawn at the realized
      // money supply, which may be negative and so is not a valid Parameters.
      const double M = eq.M_realized;
      out.push_back(make_series(CurveKind::LM, slot, sc,
                                with_node(xs, lm_kink_output_at(p, M), grid),
                                [&](double Y) { return lm_rate_at(p, M, Y); }));
      break;
    }
    case Plot::MoneyMarket: {
      // Demand at the equilibrium income, in (real balances, rate) space.
      const double kink = p.h1() * eq.Y_star;
      auto demand = make_series(CurveKind::MoneyDemand, slot, sc, with_node(xs, kink, grid),
                                [&](double m) { return std::max(0.0, (kink - m) / p.h2()); });
      double top = std::max(1.0, 2 * eq.i_star);
      for (const auto& pt : demand.points) top = std::max(top, pt.y);
      const double supply = eq.M_realized / p.P();
      out.push_back(std::move(demand));
      out.push_back(CurveSeries{CurveKind::MoneySupply, slot, sc.name, {{supply, 0.0}, {supply, top}}});
      break;
    }
    case Plot::GoodsMarket: {
      out.push_back(make_series(CurveKind::AggregateDemand, slot, sc, xs,
                                [&](double Y) { return aggregate_demand(p, Y, eq.i_star); }));
      out.push_back(make_series(CurveKind::FortyFiveDegree, slot, sc, xs,
                                [](double Y) { return Y; }));
      break;
    }
  }
  return out;
}

}  // namespace islm
