#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "generators.hpp"
#include "islm/errors.hpp"
#include "islm/scenario.hpp"

using namespace islm;

namespace {

ScenarioSet walkthrough() {
  ScenarioSet set = create_scenario_set();
  set = set_parameter(set, 2, "G", 310);
  set = assign_from_previous(set, 3);
  set = set_regime(set, 3, PolicyRegime::interest_rate_control(5));
  return set;
}

const CurveSeries& series_of(const std::vector<CurveSeries>& all, CurveKind kind) {
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& s) { return s.kind == kind; });
  REQUIRE(it != all.end());
  return *it;
}

bool has_point(const CurveSeries& s, double x, double y, double tol) {
  return std::any_of(s.points.begin(), s.points.end(), [&](const CurvePoint& p) {
    return std::abs(p.x - x) <= tol && std::abs(p.y - y) <= tol;
  });
}

}  // namespace

TEST_CASE("create_scenario_set") {
  const ScenarioSet set = create_scenario_set();
  for (int k = 1; k <= 3; ++k) {
    const Equilibrium eq = set.slot(k).solve();
    CHECK(eq.Y_star == doctest::Approx(1050));
    CHECK(eq.i_star == doctest::Approx(5));
    CHECK(set.slot(k).name == "Model " + std::to_string(k));
  }
  const std::vector<int> all = {1, 2, 3};
  const ComparisonTable table = compare(set, all);
  REQUIRE(table.deltas.size() == 2);
  for (const auto& d : table.deltas) {
    CHECK(d.Y_star == 0);
    CHECK(d.i_star == 0);
    CHECK(d.M_realized == 0);
    CHECK(d.budget_balance == 0);
  }
  CHECK(set.slot(1).visible_in.size() == 3);
  CHECK(set.slot(2).visible_in.empty());
}

TEST_CASE("slot addressing") {
  ScenarioSet set;
  CHECK_THROWS_AS(set.slot(0), InvalidSlot);
  CHECK_THROWS_AS(set.slot(4), InvalidSlot);
}

TEST_CASE("assign_from_previous") {
  ScenarioSet set = set_parameter(create_scenario_set(), 1, "G", 310);
  set = assign_from_previous(set, 2);
  CHECK(set.slot(2).params.G() == 310);
  CHECK(set.slot(2).name == "Model 2");

  const ScenarioSet edited = set_parameter(set, 2, "M", 400);
  CHECK(edited.slot(1).params.M() == 200);
  CHECK(edited.slot(2).params.M() == 400);

  CHECK(assign_from_previous(set, 2) == assign_from_previous(assign_from_previous(set, 2), 2));
  CHECK_THROWS_AS(assign_from_previous(set, 1), InvalidSlot);
  CHECK_THROWS_AS(assign_from_previous(set, 4), InvalidSlot);

  // Regime travels with the copy.
  ScenarioSet ctl = set_regime(set, 2, PolicyRegime::interest_rate_control(3));
  ctl = assign_from_previous(ctl, 3);
  CHECK(ctl.slot(3).regime == PolicyRegime::interest_rate_control(3));
}

TEST_CASE("reset_defaults") {
  ScenarioSet set = create_scenario_set();
  set = set_parameter(set, 1, "c", 0.8);
  set = set_parameter(set, 1, "M", 900);
  set = set_regime(set, 1, PolicyRegime::interest_rate_control(2));
  set = set_parameter(set, 2, "G", 400);
  const ScenarioSet reset = reset_defaults(set, 1);
  CHECK(reset.slot(1).solve().Y_star == doctest::Approx(1050));
  CHECK(reset.slot(1).solve().i_star == doctest::Approx(5));
  CHECK_FALSE(reset.slot(1).regime.is_rate_control());
  CHECK(reset.slot(2) == set.slot(2));
  CHECK(reset.slot(3) == set.slot(3));

  CHECK(reset_defaults(create_scenario_set(), 1) == create_scenario_set());
  CHECK_THROWS_AS(reset_defaults(set, 2), InvalidSlot);
  CHECK_THROWS_AS(reset_defaults(set, 3), InvalidSlot);
}

TEST_CASE("set_parameter") {
  const ScenarioSet set = set_parameter(create_scenario_set(), 2, "G", 310);
  CHECK(set.slot(2).solve().Y_star == doctest::Approx(1090));
  CHECK(set.slot(2).solve().i_star == doctest::Approx(9));

  try {
    set_parameter(set, 1, "c", 1.2);
    FAIL("expected OutOfRange");
  } catch (const OutOfRange& e) {
    CHECK(e.field() == "c");
    CHECK(e.lo() == 0.01);
    CHECK(e.hi() == 0.99);
  }
  CHECK_THROWS_AS(set_parameter(set, 1, "c", 0.99), OutOfRange);  // open bound
  CHECK_THROWS_AS(set_parameter(set, 1, "M", -1), OutOfRange);
  CHECK_THROWS_AS(set_parameter(set, 1, "NX", -501), OutOfRange);
  CHECK_NOTHROW(set_parameter(set, 1, "NX", -500));
  CHECK_THROWS_AS(set_parameter(set, 1, "kappa", 1), UnknownParameter);

  const ScenarioSet same = set_parameter(create_scenario_set(), 1, "M", 200);
  CHECK(same == create_scenario_set());
}

TEST_CASE("set_regime") {
  const ScenarioSet set = walkthrough();
  const Equilibrium eq = set.slot(3).solve();
  CHECK(eq.Y_star == doctest::Approx(1170));
  CHECK(eq.M_realized == doctest::Approx(224));
  CHECK(set.slot(3).money_supply_stale());
  CHECK(set.slot(3).params.M() == 200);  // retained, not overwritten
  CHECK_FALSE(set.slot(2).money_supply_stale());

  const ScenarioSet back = set_regime(set, 3, PolicyRegime::money_supply_control());
  CHECK(back.slot(3).solve().Y_star == doctest::Approx(1090));
  CHECK_FALSE(back.slot(3).money_supply_stale());

  CHECK_THROWS_AS(set_regime(set, 3, PolicyRegime::interest_rate_control(-1)), InvalidRegime);
  CHECK_THROWS_AS(set_regime(set, 3, PolicyRegime::interest_rate_control(31)), InvalidRegime);
}

TEST_CASE("compare: counterfactual walkthrough") {
  const std::vector<int> all = {1, 2, 3};
  const ComparisonTable table = compare(walkthrough(), all);
  REQUIRE(table.entries.size() == 3);
  REQUIRE(table.deltas.size() == 2);
  CHECK(table.deltas[0].from_slot == 1);
  CHECK(table.deltas[0].to_slot == 2);
  CHECK(table.deltas[0].Y_star == doctest::Approx(40));
  CHECK(table.deltas[0].i_star == doctest::Approx(4));
  CHECK(table.deltas[0].composition.I == doctest::Approx(-40));
  CHECK(table.deltas[1].Y_star == doctest::Approx(80));
  CHECK(table.deltas[1].i_star == doctest::Approx(-4));
  for (std::size_t k = 0; k < table.deltas.size(); ++k) {
    const auto& a = table.entries[k].equilibrium;
    const auto& b = table.entries[k + 1].equilibrium;
    CHECK(table.deltas[k].Y_star == b.Y_star - a.Y_star);
    CHECK(table.deltas[k].M_realized == b.M_realized - a.M_realized);
    CHECK(table.deltas[k].composition.C == b.composition.C - a.composition.C);
  }
}

TEST_CASE("compare: selections") {
  const ScenarioSet set = walkthrough();
  const std::vector<int> one = {1};
  CHECK(compare(set, one).entries.size() == 1);
  CHECK(compare(set, one).deltas.empty());

  const std::vector<int> reversed = {3, 1};
  const ComparisonTable t = compare(set, reversed);
  CHECK(t.entries[0].slot == 1);
  CHECK(t.entries[1].slot == 3);

  const std::vector<int> none;
  const std::vector<int> dup = {2, 2};
  const std::vector<int> bad = {1, 4};
  CHECK_THROWS_AS(compare(set, none), EmptySelection);
  CHECK_THROWS_AS(compare(set, dup), DuplicateSelection);
  CHECK_THROWS_AS(compare(set, bad), InvalidSlot);
}

TEST_CASE("sample_curves: IS-LM") {
  const ScenarioSet set = create_scenario_set();
  const Grid grid = default_grid(set, 1, Plot::IsLm);
  CHECK(grid.min == 0);
  CHECK(grid.max == doctest::Approx(2100));
  CHECK(grid.n == kDefaultGridPoints);

  const auto series = sample_curves(set, 1, Plot::IsLm);
  REQUIRE(series.size() == 2);
  const auto& is = series_of(series, CurveKind::IS);
  const auto& lm = series_of(series, CurveKind::LM);
  CHECK(is.scenario == "Model 1");
  CHECK(is.points.size() == 201);
  CHECK(has_point(is, 1050, 5, 1e-9));
  CHECK(has_point(lm, 1050, 5, 1e-9));
  // The kink at Y = 1000 falls between grid nodes (step 10.5) and is inserted.
  CHECK(lm.points.size() == 202);
  CHECK(has_point(lm, 1000, 0, 0));
  CHECK(std::is_sorted(lm.points.begin(), lm.points.end(),
                       [](auto& a, auto& b) { return a.x < b.x; }));
}

TEST_CASE("sample_curves: kink handling on small grids") {
  const ScenarioSet set = create_scenario_set();
  auto lm_points = [&](Grid g) {
    return series_of(sample_curves(set, 1, Plot::IsLm, g), CurveKind::LM).points.size();
  };
  CHECK(lm_points({0, 2000, 2}) == 3);      // kink interior
  CHECK(lm_points({1100, 2000, 2}) == 2);   // kink outside
  CHECK(lm_points({1000, 2000, 2}) == 2);   // kink on an endpoint
  CHECK(lm_points({0, 2000, 3}) == 3);      // kink already a node
  CHECK(series_of(sample_curves(set, 1, Plot::IsLm, Grid{0, 2000, 2}), CurveKind::IS).points.size() == 2);
}

TEST_CASE("sample_curves: money market") {
  const ScenarioSet set = create_scenario_set();
  const auto series = sample_curves(set, 1, Plot::MoneyMarket);
  const auto& demand = series_of(series, CurveKind::MoneyDemand);
  const auto& supply = series_of(series, CurveKind::MoneySupply);
  // Real balances 200 clear the market at i = 5.
  for (const auto& pt : supply.points) CHECK(pt.x == 200);
  const Parameters& p = set.slot(1).params;
  const double Y = set.slot(1).solve().Y_star;
  for (const auto& pt : demand.points) {
    CHECK(std::abs(pt.y - std::max(0.0, (p.h1() * Y - pt.x) / p.h2())) <= 1e-9);
  }
  // Equilibrium on both curves: demand at m = 200 is 5.
  CHECK(std::abs(std::max(0.0, (p.h1() * Y - 200) / p.h2()) - 5) <= 1e-9);
  CHECK(has_point(demand, p.h1() * Y, 0, 1e-9));
}

TEST_CASE("sample_curves: goods market") {
  const ScenarioSet set = create_scenario_set();
  const auto series = sample_curves(set, 1, Plot::GoodsMarket);
  const auto& zz = series_of(series, CurveKind::AggregateDemand);
  const auto& diag = series_of(series, CurveKind::FortyFiveDegree);
  for (const auto& pt : diag.points) CHECK(pt.y == pt.x);
  CHECK(has_point(zz, 1050, 1050, 1e-9));
  // ZZ lies above the 45-degree line below Y* and below it above Y*.
  for (std::size_t k = 0; k < zz.points.size(); ++k) {
    const double gap = zz.points[k].y - diag.points[k].y;
    if (zz.points[k].x < 1049) CHECK(gap > 0);
    if (zz.points[k].x > 1051) CHECK(gap < 0);
  }
}

TEST_CASE("sample_curves: grid validation") {
  const ScenarioSet set = create_scenario_set();
  CHECK_THROWS_AS(sample_curves(set, 1, Plot::IsLm, Grid{0, 100, 1}), InvalidGrid);
  CHECK_THROWS_AS(sample_curves(set, 1, Plot::IsLm, Grid{100, 100, 5}), InvalidGrid);
  CHECK_THROWS_AS(sample_curves(set, 1, Plot::IsLm, Grid{200, 100, 5}), InvalidGrid);
  CHECK_THROWS_AS(sample_curves(set, 1, Plot::IsLm, Grid{0, INFINITY, 5}), InvalidGrid);
  CHECK_THROWS_AS(sample_curves(set, 5, Plot::IsLm), InvalidSlot);
  CHECK_THROWS_AS(parse_plot("phillips"), UnknownPlot);
  CHECK(parse_plot("money") == Plot::MoneyMarket);
}

TEST_CASE("default grid covers visible slots") {
  ScenarioSet set = walkthrough();
  CHECK(default_grid(set, 1, Plot::IsLm).max == doctest::Approx(2100));
  set = set_visibility(set, 3, Plot::IsLm, true);
  CHECK(default_grid(set, 1, Plot::IsLm).max == doctest::Approx(2340));
  // Visibility never touches parameters.
  CHECK(set.slot(3).params == walkthrough().slot(3).params);
}

TEST_CASE("property: deep-copy isolation under random edits") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> pick_field(0, 11);
  std::uniform_int_distribution<int> pick_side(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    ScenarioSet set = set_parameter(create_scenario_set(), 1, "G", 100 + trial);
    set = assign_from_previous(set, 2);
    const Scenario slot1 = set.slot(1);
    const Scenario slot2 = set.slot(2);
    bool touched[2] = {false, false};
    for (int step = 0; step < 10; ++step) {
      const ParameterName name = kAllParameters[static_cast<std::size_t>(pick_field(rng))];
      const auto r = slider_range(name);
      const double lo = r.lo_open ? r.lo + 1e-6 : r.lo;
      const double hi = r.hi_open ? r.hi - 1e-6 : r.hi;
      const double value = std::uniform_real_distribution<double>(lo, hi)(rng);
      const int side = pick_side(rng);
      set = set_parameter(set, side + 1, to_string(name), value);
      touched[side] = true;
    }
    if (!touched[0]) CHECK(set.slot(1) == slot1);
    if (!touched[1]) CHECK(set.slot(2) == slot2);
    CHECK(set.slot(3) == create_scenario_set().slot(3));
  }
}

TEST_CASE("property: reset/assign algebra") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    ScenarioSet set = create_scenario_set();
    for (int slot = 1; slot <= 3; ++slot) {
      const Parameters p = testgen::random_parameters(rng);
      for (auto name : kAllParameters) set = set_parameter(set, slot, to_string(name), p.get(name));
    }
    set = set_regime(set, 3, PolicyRegime::interest_rate_control(4));
    set = assign_from_previous(assign_from_previous(reset_defaults(set, 1), 2), 3);
    const Equilibrium a = set.slot(1).solve();
    CHECK(set.slot(2).solve() == a);
    CHECK(set.slot(3).solve() == a);
  }
}

TEST_CASE("property: curve faithfulness and equilibrium on curves") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> n_dist(2, 300);
  for (int trial = 0; trial < 300; ++trial) {
    ScenarioSet set = create_scenario_set();
    const Parameters p = testgen::random_parameters(rng);
    for (auto name : kAllParameters) set = set_parameter(set, 1, to_string(name), p.get(name));
    if (trial % 2) {
      set = set_regime(set, 1, PolicyRegime::interest_rate_control(
                                   std::uniform_real_distribution<double>(0, 30)(rng)));
    }
    const Equilibrium eq = set.slot(1).solve();
    const double lo = std::uniform_real_distribution<double>(-500, 500)(rng);
    const Grid grid{lo, lo + std::uniform_real_distribution<double>(1, 5000)(rng), n_dist(rng)};

    for (Plot plot : {Plot::IsLm, Plot::MoneyMarket, Plot::GoodsMarket}) {
      for (const auto& s : sample_curves(set, 1, plot, grid)) {
        CHECK(std::is_sorted(s.points.begin(), s.points.end(),
                             [](auto& a, auto& b) { return a.x < b.x; }));
        for (const auto& pt : s.points) {
          double expected = pt.y;
          switch (s.kind) {
            case CurveKind::IS: expected = is_rate(p, pt.x); break;
            case CurveKind::LM:
              expected = set.slot(1).regime.is_rate_control()
                             ? lm_rate(p.with(ParameterName::M, std::max(0.0, eq.M_realized)), pt.x)
                             : lm_rate(p, pt.x);
              if (eq.M_realized < 0) expected = pt.y;  // no valid Parameters to compare against
              break;
            case CurveKind::AggregateDemand: expected = aggregate_demand(p, pt.x, eq.i_star); break;
            case CurveKind::FortyFiveDegree: expected = pt.x; break;
            case CurveKind::MoneyDemand:
              expected = std::max(0.0, (p.h1() * eq.Y_star - pt.x) / p.h2());
              break;
            case CurveKind::MoneySupply:
              CHECK(pt.x == eq.M_realized / p.P());
              break;
          }
          CHECK(std::abs(pt.y - expected) <= kTolerance * std::max(1.0, std::abs(expected)));
        }
      }
    }
    // LM kink node present whenever it is strictly inside the grid.
    const double kink = eq.M_realized / (p.h1() * p.P());
    const auto& lm = series_of(sample_curves(set, 1, Plot::IsLm, grid), CurveKind::LM);
    if (kink > grid.min && kink < grid.max) CHECK(has_point(lm, kink, 0, 0));

    // Equilibrium on both plotted relations: IS, and LM at the realized money supply.
    const double tol = kTolerance * std::max(1.0, std::abs(eq.Y_star));
    const double lm_at_eq = std::max(0.0, (p.h1() * eq.Y_star - eq.M_realized / p.P()) / p.h2());
    CHECK(std::abs(lm_at_eq - eq.i_star) <= tol);
    CHECK(std::abs(is_rate(p, eq.Y_star) - eq.i_star) <= tol);
  }
}

TEST_CASE("determinism") {
  const ScenarioSet set = walkthrough();
  const std::vector<int> all = {1, 2, 3};
  const auto a = compare(set, all);
  const auto b = compare(set, all);
  for (std::size_t k = 0; k < a.entries.size(); ++k) CHECK(a.entries[k].equilibrium == b.entries[k].equilibrium);
  CHECK(sample_curves(set, 2, Plot::IsLm) == sample_curves(set, 2, Plot::IsLm));
}
