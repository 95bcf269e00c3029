#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "islm/parameters.hpp"

namespace islm {

/// Monetary policy regime. Under money-supply control M is exogenous and the
/// rate adjusts; under interest-rate control the central bank fixes `i_bar`
/// and the money supply adjusts.
class PolicyRegime {
 public:
  enum class Kind { MoneySupplyControl, InterestRateControl };

  static PolicyRegime money_supply_control() { return PolicyRegime(); }
  /// Throws InvalidRegime unless i_bar is finite and >= 0.
  static PolicyRegime interest_rate_control(double i_bar);

  Kind kind() const noexcept { return kind_; }
  bool is_rate_control() const noexcept { return kind_ == Kind::InterestRateControl; }
  /// Target rate; only meaningful under interest-rate control.
  double i_bar() const noexcept { return i_bar_; }

  friend bool operator==(const PolicyRegime&, const PolicyRegime&) = default;

 private:
  PolicyRegime() = default;
  Kind kind_ = Kind::MoneySupplyControl;
  double i_bar_ = 0;
};

enum class Diagnostic {
  NegativeImpliedMoneySupply,
  NegativeInvestment,
  NegativeMoneyDemand,
};

std::string_view to_string(Diagnostic d);

struct GdpComposition {
  double C = 0;
  double I = 0;
  double G = 0;
  double NX = 0;

  double total() const noexcept { return C + I + G + NX; }
  friend bool operator==(const GdpComposition&, const GdpComposition&) = default;
};

struct Equilibrium {
  double Y_star = 0;
  double i_star = 0;
  double r_star = 0;
  double M_realized = 0;
  bool at_zlb = false;
  GdpComposition composition;
  double budget_balance = 0;
  /// Rate where IS meets the unfloored LM line (money-supply control only).
  std::optional<double> unconstrained_rate;
  std::vector<Diagnostic> diagnostics;

  bool has(Diagnostic d) const noexcept;
  friend bool operator==(const Equilibrium&, const Equilibrium&) = default;
};

/// Relative tolerance for closed-form identities.
inline constexpr double kTolerance = 1e-9;

// Goods market.
double consumption(const Parameters& p, double Y);
double investment(const Parameters& p, double i);
double aggregate_demand(const Parameters& p, double Y, double i);

/// Output on the IS curve at rate i: the fixed point of Y = ZZ(Y, i).
double is_output(const Parameters& p, double i);
/// Inverse of is_output. Not floored at zero.
double is_rate(const Parameters& p, double Y);

// Financial markets.
double money_demand(const Parameters& p, double Y, double i);
/// LM curve, floored at the zero lower bound. Exactly zero up to the kink.
double lm_rate(const Parameters& p, double Y);
/// Output M/(h1 P) where the LM curve leaves the zero floor.
double lm_kink_output(const Parameters& p);

/// LM curve and kink for a money stock other than p.M(), e.g. the realized
/// supply under interest-rate control. M may be negative.
double lm_rate_at(const Parameters& p, double M, double Y);
double lm_kink_output_at(const Parameters& p, double M);

GdpComposition gdp_composition(const Parameters& p, double Y, double i);
/// T - G; negative values are deficits.
double budget_balance(const Parameters& p);

Equilibrium solve_equilibrium(const Parameters& p, const PolicyRegime& regime);

/// dY*/dG. Throws BranchAmbiguous when a money-supply-control equilibrium sits
/// exactly on the kink.
double fiscal_multiplier(const Parameters& p, const PolicyRegime& regime);

}  // namespace islm
