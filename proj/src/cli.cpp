#include "islm/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "islm/document.hpp"
#include "islm/errors.hpp"

namespace islm::cli {

namespace {

// Shortest text that parses back to the same double.
std::string full(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string fixed2(double x, bool sign = false) {
  std::ostringstream os;
  if (sign && x >= 0) os << '+';
  os << std::fixed << std::setprecision(2) << (x == 0 ? 0.0 : x);
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string regime_label(const PolicyRegime& regime) {
  return regime.is_rate_control() ? "interest_rate" : "money_supply";
}

std::string diagnostics_text(const Equilibrium& eq, const char* sep) {
  std::string text;
  for (Diagnostic d : eq.diagnostics) {
    if (!text.empty()) text += sep;
    text += to_string(d);
  }
  return text;
}

std::string read_input(const std::string& file, std::istream& in) {
  std::ostringstream buf;
  if (file == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(file, std::ios::binary);
    if (!f) throw Error("cannot open scenario file '" + file + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

OutputFormat parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::HumanTable;
  if (text == "structured") return OutputFormat::StructuredText;
  if (text == "columns") return OutputFormat::DelimitedColumns;
  throw Error("unknown format '" + text + "' (expected table, structured or columns)");
}

std::vector<int> parse_slot_list(const std::string& text) {
  std::vector<int> slots;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int value = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw Error("invalid slot '" + item + "' in --slots");
    }
    slots.push_back(value);
  }
  return slots;
}

void render_solve_table(const ScenarioSet& set, std::ostream& out) {
  out << std::left << std::setw(12) << "scenario" << std::setw(16) << "regime" << std::right;
  for (const char* h : {"Y*", "i*", "M", "C", "I", "G", "NX", "balance"}) {
    out << std::setw(11) << h;
  }
  out << "  zlb  diagnostics\n";
  for (const Scenario& sc : set.slots()) {
    const Equilibrium eq = sc.solve();
    std::string regime = sc.regime.is_rate_control() ? "rate @ " + fixed2(sc.regime.i_bar())
                                                     : "money supply";
    out << std::left << std::setw(12) << sc.name << std::setw(16) << regime << std::right;
    for (double v : {eq.Y_star, eq.i_star, eq.M_realized, eq.composition.C, eq.composition.I,
                     eq.composition.G, eq.composition.NX, eq.budget_balance}) {
      out << std::setw(11) << fixed2(v);
    }
    out << "  " << (eq.at_zlb ? "yes" : "no ") << "  " << diagnostics_text(eq, ", ") << "\n";
  }
}

void render_solve_columns(const ScenarioSet& set, std::ostream& out) {
  out << "slot,name,regime,i_bar,Y_star,i_star,r_star,M_realized,C,I,G,NX,budget_balance,"
         "at_zlb,money_supply_stale,diagnostics\n";
  for (int k = 1; k <= kSlotCount; ++k) {
    const Scenario& sc = set.slot(k);
    const Equilibrium eq = sc.solve();
    out << k << ',' << csv_field(sc.name) << ',' << regime_label(sc.regime) << ','
        << (sc.regime.is_rate_control() ? full(sc.regime.i_bar()) : "") << ','
        << full(eq.Y_star) << ',' << full(eq.i_star) << ',' << full(eq.r_star) << ','
        << full(eq.M_realized) << ',' << full(eq.composition.C) << ','
        << full(eq.composition.I) << ',' << full(eq.composition.G) << ','
        << full(eq.composition.NX) << ',' << full(eq.budget_balance) << ','
        << (eq.at_zlb ? "true" : "false") << ','
        << (sc.money_supply_stale() ? "true" : "false") << ',' << diagnostics_text(eq, ";")
        << "\n";
  }
}

void render_compare_table(const ComparisonTable& table, std::ostream& out) {
  out << std::left << std::setw(10) << "" << std::right;
  for (const auto& e : table.entries) out << std::setw(12) << e.name;
  for (const auto& d : table.deltas) {
    out << std::setw(12)
        << ("d(" + std::to_string(d.to_slot) + "-" + std::to_string(d.from_slot) + ")");
  }
  out << "\n";

  auto row = [&](const char* label, auto value_of, auto delta_of) {
    out << std::left << std::setw(10) << label << std::right;
    for (const auto& e : table.entries) out << std::setw(12) << fixed2(value_of(e.equilibrium));
    for (const auto& d : table.deltas) out << std::setw(12) << fixed2(delta_of(d), true);
    out << "\n";
  };
  row("Y*", [](const Equilibrium& e) { return e.Y_star; },
      [](const ComparisonDelta& d) { return d.Y_star; });
  row("i*", [](const Equilibrium& e) { return e.i_star; },
      [](const ComparisonDelta& d) { return d.i_star; });
  row("M", [](const Equilibrium& e) { return e.M_realized; },
      [](const ComparisonDelta& d) { return d.M_realized; });
  row("C", [](const Equilibrium& e) { return e.composition.C; },
      [](const ComparisonDelta& d) { return d.composition.C; });
  row("I", [](const Equilibrium& e) { return e.composition.I; },
      [](const ComparisonDelta& d) { return d.composition.I; });
  row("G", [](const Equilibrium& e) { return e.composition.G; },
      [](const ComparisonDelta& d) { return d.composition.G; });
  row("NX", [](const Equilibrium& e) { return e.composition.NX; },
      [](const ComparisonDelta& d) { return d.composition.NX; });
  row("balance", [](const Equilibrium& e) { return e.budget_balance; },
      [](const ComparisonDelta& d) { return d.budget_balance; });

  out << std::left << std::setw(10) << "zlb" << std::right;
  for (const auto& e : table.entries) out << std::setw(12) << (e.equilibrium.at_zlb ? "yes" : "no");
  out << "\n";
}

void render_compare_columns(const ComparisonTable& table, std::ostream& out) {
  out << "row,slot,from_slot,to_slot,name,Y_star,i_star,M_realized,C,I,G,NX,budget_balance,"
         "at_zlb\n";
  for (const auto& e : table.entries) {
    const Equilibrium& q = e.equilibrium;
    out << "value," << e.slot << ",,," << csv_field(e.name) << ',' << full(q.Y_star) << ','
        << full(q.i_star) << ',' << full(q.M_realized) << ',' << full(q.composition.C) << ','
        << full(q.composition.I) << ',' << full(q.composition.G) << ','
        << full(q.composition.NX) << ',' << full(q.budget_balance) << ','
        << (q.at_zlb ? "true" : "false") << "\n";
  }
  for (const auto& d : table.deltas) {
    out << "delta,," << d.from_slot << ',' << d.to_slot << ",," << full(d.Y_star) << ','
        << full(d.i_star) << ',' << full(d.M_realized) << ',' << full(d.composition.C) << ','
        << full(d.composition.I) << ',' << full(d.composition.G) << ','
        << full(d.composition.NX) << ',' << full(d.budget_balance) << ",\n";
  }
}

void render_curves_columns(const std::vector<CurveSeries>& series, std::ostream& out) {
  out << "x,y,curve_kind,scenario\n";
  for (const auto& s : series) {
    for (const auto& pt : s.points) {
      out << full(pt.x) << ',' << full(pt.y) << ',' << to_string(s.kind) << ','
          << csv_field(s.scenario) << "\n";
    }
  }
}

void render_curves_table(const std::vector<CurveSeries>& series, std::ostream& out) {
  for (const auto& s : series) {
    out << to_string(s.kind) << " (" << s.scenario << ")\n";
    for (const auto& pt : s.points) {
      out << std::setw(14) << fixed2(pt.x) << std::setw(14) << fixed2(pt.y) << "\n";
    }
  }
}

struct Options {
  std::string file;
  std::string format;
  int slot = 1;
  std::string plot = "islm";
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::optional<int> grid_n;
  std::string slots = "1,2,3";
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"IS-LM equilibrium workbench", "islm"};
  app.require_subcommand(1);
  Options opt;

  auto* defaults = app.add_subcommand("defaults", "Print the default three-slot scenario file");

  auto* solve = app.add_subcommand("solve", "Solve every scenario in a file");
  auto* curves = app.add_subcommand("curves", "Export curve samples for one plot of one slot");
  auto* comp = app.add_subcommand("compare", "Compare equilibria across slots");
  for (auto* sub : {solve, curves, comp}) {
    sub->add_option("-f,--file", opt.file, "Scenario file, or '-' for standard input")->required();
    sub->add_option("--format", opt.format, "table | structured | columns");
  }
  curves->add_option("--slot", opt.slot, "Slot 1..3");
  curves->add_option("--plot", opt.plot, "islm | money | goods");
  curves->add_option("--grid-min", opt.grid_min, "Lower end of the x grid");
  curves->add_option("--grid-max", opt.grid_max, "Upper end of the x grid");
  curves->add_option("--grid-n", opt.grid_n, "Number of grid nodes (>= 2)");
  comp->add_option("--slots", opt.slots, "Comma-separated slot list");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (defaults->parsed()) {
      out << dump_scenario_document(create_scenario_set());
      return 0;
    }

    const ScenarioSet set = parse_scenario_document(read_input(opt.file, in));

    if (solve->parsed()) {
      switch (opt.format.empty() ? OutputFormat::HumanTable : parse_format(opt.format)) {
        case OutputFormat::HumanTable: render_solve_table(set, out); break;
        case OutputFormat::StructuredText: out << dump_structured(solve_results_to_json(set)); break;
        case OutputFormat::DelimitedColumns: render_solve_columns(set, out); break;
      }
    } else if (curves->parsed()) {
      const Plot plot = parse_plot(opt.plot);
      check_slot(opt.slot);
      Grid grid = default_grid(set, opt.slot, plot);
      if (opt.grid_min) grid.min = *opt.grid_min;
      if (opt.grid_max) grid.max = *opt.grid_max;
      if (opt.grid_n) grid.n = *opt.grid_n;
      const auto series = sample_curves(set, opt.slot, plot, grid);
      switch (opt.format.empty() ? OutputFormat::DelimitedColumns : parse_format(opt.format)) {
        case OutputFormat::HumanTable: render_curves_table(series, out); break;
        case OutputFormat::StructuredText:
          out << dump_structured(curves_to_json(plot, opt.slot, grid, series));
          break;
        case OutputFormat::DelimitedColumns: render_curves_columns(series, out); break;
      }
    } else if (comp->parsed()) {
      const std::vector<int> slots = parse_slot_list(opt.slots);
      const ComparisonTable table = compare(set, slots);
      switch (opt.format.empty() ? OutputFormat::HumanTable : parse_format(opt.format)) {
        case OutputFormat::HumanTable: render_compare_table(table, out); break;
        case OutputFormat::StructuredText: out << dump_structured(comparison_to_json(table)); break;
        case OutputFormat::DelimitedColumns: render_compare_columns(table, out); break;
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace islm::cli
