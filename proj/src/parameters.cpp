#include "islm/parameters.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "islm/errors.hpp"

namespace islm {

std::string_view to_string(ParameterName name) {
  switch (name) {
    case ParameterName::A: return "A";
    case ParameterName::c: return "c";
    case ParameterName::T: return "T";
    case ParameterName::B: return "B";
    case ParameterName::b: return "b";
    case ParameterName::pi_e: return "pi_e";
    case ParameterName::G: return "G";
    case ParameterName::NX: return "NX";
    case ParameterName::h1: return "h1";
    case ParameterName::h2: return "h2";
    case ParameterName::M: return "M";
    case ParameterName::P: return "P";
  }
  return "?";
}

std::optional<ParameterName> parse_parameter_name(std::string_view text) {
  for (auto name : kAllParameters) {
    if (to_string(name) == text) return name;
  }
  return std::nullopt;
}

double& field_ref(ParameterValues& v, ParameterName name) noexcept {
  switch (name) {
    case ParameterName::A: return v.A;
    case ParameterName::c: return v.c;
    case ParameterName::T: return v.T;
    case ParameterName::B: return v.B;
    case ParameterName::b: return v.b;
    case ParameterName::pi_e: return v.pi_e;
    case ParameterName::G: return v.G;
    case ParameterName::NX: return v.NX;
    case ParameterName::h1: return v.h1;
    case ParameterName::h2: return v.h2;
    case ParameterName::M: return v.M;
    case ParameterName::P: return v.P;
  }
  return v.A;
}

double field_value(const ParameterValues& v, ParameterName name) noexcept {
  return field_ref(const_cast<ParameterValues&>(v), name);
}

namespace {

void require(bool ok, ParameterName name, const char* rule) {
  if (!ok) {
    throw InvalidParameters(std::string(to_string(name)),
                            std::string("invalid parameter ") + std::string(to_string(name)) +
                                ": must satisfy " + rule);
  }
}

}  // namespace

Parameters::Parameters(const ParameterValues& values) : v_(values) {
  for (auto name : kAllParameters) {
    require(std::isfinite(field_value(v_, name)), name, "finite value");
  }
  require(v_.c > 0 && v_.c < 1, ParameterName::c, "0 < c < 1");
  require(v_.b > 0, ParameterName::b, "b > 0");
  require(v_.h1 > 0, ParameterName::h1, "h1 > 0");
  require(v_.h2 > 0, ParameterName::h2, "h2 > 0");
  require(v_.P > 0, ParameterName::P, "P > 0");
  require(v_.M >= 0, ParameterName::M, "M >= 0");
}

Parameters Parameters::defaults() {
  return Parameters(ParameterValues{.A = 160,
                                    .c = 0.5,
                                    .T = 200,
                                    .B = 215,
                                    .b = 10,
                                    .pi_e = 0,
                                    .G = 250,
                                    .NX = 50,
                                    .h1 = 0.2,
                                    .h2 = 2,
                                    .M = 200,
                                    .P = 1});
}

double Parameters::get(ParameterName name) const noexcept { return field_value(v_, name); }

Parameters Parameters::with(ParameterName name, double value) const {
  ParameterValues next = v_;
  field_ref(next, name) = value;
  return Parameters(next);
}

SliderRange slider_range(ParameterName name) {
  switch (name) {
    case ParameterName::c: return {0.01, 0.99, true, true};
    case ParameterName::b:
    case ParameterName::h2: return {0.1, 100};
    case ParameterName::h1: return {0.01, 2};
    case ParameterName::P: return {0.1, 10};
    case ParameterName::M: return {0, 2000};
    case ParameterName::A:
    case ParameterName::B: return {0, 1000};
    case ParameterName::G:
    case ParameterName::T:
    case ParameterName::NX: return {-500, 1000};
    case ParameterName::pi_e: return {-10, 10};
  }
  return {0, 0};
}

SliderRange interest_rate_slider_range() { return {0, 30}; }

void check_slider_range(ParameterName name, double value) {
  const SliderRange r = slider_range(name);
  if (r.contains(value)) return;
  std::ostringstream msg;
  msg << "parameter " << to_string(name) << " = " << value << " outside allowed range "
      << (r.lo_open ? '(' : '[') << r.lo << ", " << r.hi << (r.hi_open ? ')' : ']');
  throw OutOfRange(std::string(to_string(name)), r.lo, r.hi, msg.str());
}

}  // namespace islm
