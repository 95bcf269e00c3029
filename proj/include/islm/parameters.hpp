#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace islm {

/// Exogenous model inputs. Money amounts are in currency units (CU), rates
/// in percentage points (5 means 5%).
struct ParameterValues {
  double A = 0;     // autonomous consumption
  double c = 0;     // marginal propensity to consume
  double T = 0;     // lump-sum taxes
  double B = 0;     // autonomous investment
  double b = 0;     // investment response to the real rate, CU per pp
  double pi_e = 0;  // expected inflation, pp
  double G = 0;     // government spending
  double NX = 0;    // net exports
  double h1 = 0;    // money demand response to income
  double h2 = 0;    // money demand response to the interest rate, CU per pp
  double M = 0;     // nominal money supply
  double P = 0;     // price level

  friend bool operator==(const ParameterValues&, const ParameterValues&) = default;
};

enum class ParameterName { A, c, T, B, b, pi_e, G, NX, h1, h2, M, P };

inline constexpr std::array<ParameterName, 12> kAllParameters = {
    ParameterName::A,  ParameterName::c,  ParameterName::T,  ParameterName::B,
    ParameterName::b,  ParameterName::pi_e, ParameterName::G,  ParameterName::NX,
    ParameterName::h1, ParameterName::h2, ParameterName::M,  ParameterName::P};

std::string_view to_string(ParameterName name);
std::optional<ParameterName> parse_parameter_name(std::string_view text);

/// Validated parameter set. Construction enforces 0 < c < 1, b, h1, h2, P > 0,
/// M >= 0 and finiteness, so every model operation is total on a Parameters.
class Parameters {
 public:
  /// Throws InvalidParameters naming the first violated invariant.
  explicit Parameters(const ParameterValues& values);

  /// The shipped calibration D. Solves to Y = 1050, i = 5 under money-supply control.
  static Parameters defaults();

  const ParameterValues& values() const noexcept { return v_; }

  double A() const noexcept { return v_.A; }
  double c() const noexcept { return v_.c; }
  double T() const noexcept { return v_.T; }
  double B() const noexcept { return v_.B; }
  double b() const noexcept { return v_.b; }
  double pi_e() const noexcept { return v_.pi_e; }
  double G() const noexcept { return v_.G; }
  double NX() const noexcept { return v_.NX; }
  double h1() const noexcept { return v_.h1; }
  double h2() const noexcept { return v_.h2; }
  double M() const noexcept { return v_.M; }
  double P() const noexcept { return v_.P; }

  double get(ParameterName name) const noexcept;

  /// Copy with one field replaced; revalidates.
  Parameters with(ParameterName name, double value) const;

  friend bool operator==(const Parameters&, const Parameters&) = default;

 private:
  ParameterValues v_;
};

double& field_ref(ParameterValues& values, ParameterName name) noexcept;
double field_value(const ParameterValues& values, ParameterName name) noexcept;

/// Legal slider interval for a field. Bounds are inclusive unless flagged open.
struct SliderRange {
  double lo;
  double hi;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(double x) const noexcept {
    return (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
  }
};

SliderRange slider_range(ParameterName name);
SliderRange interest_rate_slider_range();

/// Throws OutOfRange if `value` is outside the slider range of `name`.
void check_slider_range(ParameterName name, double value);

}  // namespace islm
