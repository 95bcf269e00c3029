#include "islm/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "islm/errors.hpp"

namespace islm {

PolicyRegime PolicyRegime::interest_rate_control(double i_bar) {
  if (!std::isfinite(i_bar) || i_bar < 0) {
    throw InvalidRegime("interest-rate target must be finite and >= 0, got " +
                        std::to_string(i_bar));
  }
  PolicyRegime r;
  r.kind_ = Kind::InterestRateControl;
  r.i_bar_ = i_bar;
  return r;
}

std::string_view to_string(Diagnostic d) {
  switch (d) {
    case Diagnostic::NegativeImpliedMoneySupply: return "negative_implied_money_supply";
    case Diagnostic::NegativeInvestment: return "negative_investment";
    case Diagnostic::NegativeMoneyDemand: return "negative_money_demand";
  }
  return "?";
}

bool Equilibrium::has(Diagnostic d) const noexcept {
  return std::find(diagnostics.begin(), diagnostics.end(), d) != diagnostics.end();
}

namespace {

double multiplier(const Parameters& p) { return 1.0 / (1.0 - p.c()); }

// Autonomous spending term of the IS curve, including the Fisher shift b*pi_e.
double autonomous_demand(const Parameters& p) {
  return p.A() + p.B() + p.G() + p.NX() - p.c() * p.T() + p.b() * p.pi_e();
}

double real_balances(const Parameters& p) { return p.M() / p.P(); }

}  // namespace

double consumption(const Parameters& p, double Y) { return p.A() + p.c() * (Y - p.T()); }

double investment(const Parameters& p, double i) { return p.B() - p.b() * (i - p.pi_e()); }

double aggregate_demand(const Parameters& p, double Y, double i) {
  return consumption(p, Y) + investment(p, i) + p.G() + p.NX();
}

double is_output(const Parameters& p, double i) {
  const double alpha = multiplier(p);
  return alpha * autonomous_demand(p) - alpha * p.b() * i;
}

double is_rate(const Parameters& p, double Y) {
  return (autonomous_demand(p) - (1.0 - p.c()) * Y) / p.b();
}

double money_demand(const Parameters& p, double Y, double i) { return p.h1() * Y - p.h2() * i; }

double lm_kink_output_at(const Parameters& p, double M) { return M / (p.h1() * p.P()); }

double lm_rate_at(const Parameters& p, double M, double Y) {
  if (Y <= lm_kink_output_at(p, M)) return 0.0;
  return std::max(0.0, (p.h1() / p.h2()) * Y - M / (p.h2() * p.P()));
}

double lm_rate(const Parameters& p, double Y) { return lm_rate_at(p, p.M(), Y); }

double lm_kink_output(const Parameters& p) { return lm_kink_output_at(p, p.M()); }

GdpComposition gdp_composition(const Parameters& p, double Y, double i) {
  return GdpComposition{.C = consumption(p, Y), .I = investment(p, i), .G = p.G(), .NX = p.NX()};
}

double budget_balance(const Parameters& p) { return p.T() - p.G(); }

Equilibrium solve_equilibrium(const Parameters& p, const PolicyRegime& regime) {
  Equilibrium eq;
  const double alpha = multiplier(p);
  const double F = autonomous_demand(p);

  if (regime.is_rate_control()) {
    eq.i_star = regime.i_bar();
    eq.Y_star = is_output(p, eq.i_star);
    eq.M_realized = p.P() * money_demand(p, eq.Y_star, eq.i_star);
    eq.at_zlb = eq.i_star == 0;
  } else {
    const double m = real_balances(p);
    const double Y_u = (alpha * F + alpha * p.b() * m / p.h2()) /
                       (1.0 + alpha * p.b() * p.h1() / p.h2());
    const double i_u = (p.h1() / p.h2()) * Y_u - m / p.h2();
    eq.unconstrained_rate = i_u;
    if (i_u >= 0) {
      eq.Y_star = Y_u;
      eq.i_star = i_u;
    } else {
      eq.Y_star = alpha * F;
      eq.i_star = 0;
      eq.at_zlb = true;
    }
    eq.M_realized = p.M();
  }

  eq.r_star = eq.i_star - p.pi_e();
  eq.composition = gdp_composition(p, eq.Y_star, eq.i_star);
  eq.budget_balance = budget_balance(p);

  if (eq.M_realized < 0) eq.diagnostics.push_back(Diagnostic::NegativeImpliedMoneySupply);
  if (eq.composition.I < 0) eq.diagnostics.push_back(Diagnostic::NegativeInvestment);
  if (money_demand(p, eq.Y_star, eq.i_star) < 0) {
    eq.diagnostics.push_back(Diagnostic::NegativeMoneyDemand);
  }
  return eq;
}

double fiscal_multiplier(const Parameters& p, const PolicyRegime& regime) {
  const double alpha = multiplier(p);
  if (regime.is_rate_control()) return alpha;

  const double interior = alpha / (1.0 + alpha * p.b() * p.h1() / p.h2());
  const Equilibrium eq = solve_equilibrium(p, regime);
  if (eq.at_zlb) return alpha;
  if (*eq.unconstrained_rate == 0) throw BranchAmbiguous(alpha, interior);
  return interior;
}

}  // namespace islm
