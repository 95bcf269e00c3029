#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace islm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Parameters or PolicyRegime invariant does not hold. `field` names the
/// offending parameter ("c", "h2", "i_bar", ...).
class InvalidParameters : public Error {
 public:
  InvalidParameters(std::string field, const std::string& message)
      : Error(message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class InvalidRegime : public Error {
 public:
  using Error::Error;
};

class UnknownParameter : public Error {
 public:
  using Error::Error;
};

/// A slider value outside its legal range. Carries the range for display.
class OutOfRange : public Error {
 public:
  OutOfRange(std::string field, double lo, double hi, const std::string& message)
      : Error(message), field_(std::move(field)), lo_(lo), hi_(hi) {}
  const std::string& field() const noexcept { return field_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  std::string field_;
  double lo_;
  double hi_;
};

class InvalidSlot : public Error {
 public:
  using Error::Error;
};

class EmptySelection : public Error {
 public:
  using Error::Error;
};

class DuplicateSelection : public Error {
 public:
  using Error::Error;
};

class InvalidGrid : public Error {
 public:
  using Error::Error;
};

class UnknownPlot : public Error {
 public:
  using Error::Error;
};

/// The equilibrium sits exactly on the LM kink, so the output response to a
/// spending change depends on its sign. Both one-sided values are reported.
class BranchAmbiguous : public Error {
 public:
  BranchAmbiguous(double below, double above)
      : Error("equilibrium is exactly at the LM kink; multiplier is " +
              std::to_string(below) + " for spending cuts and " + std::to_string(above) +
              " for spending increases"),
        below_(below),
        above_(above) {}
  double below() const noexcept { return below_; }
  double above() const noexcept { return above_; }

 private:
  double below_;
  double above_;
};

/// Rejected scenario document or request body. `field_path` locates the
/// offending input, e.g. "scenarios[0].params.c".
class DocumentError : public Error {
 public:
  enum class Kind { Syntax, Schema, InvalidParameters, UnknownPlot, InvalidGrid, InvalidSelection };

  DocumentError(Kind kind, std::string field_path, const std::string& message)
      : Error(field_path.empty() ? message : field_path + ": " + message),
        kind_(kind),
        field_path_(std::move(field_path)) {}
  Kind kind() const noexcept { return kind_; }
  const std::string& field_path() const noexcept { return field_path_; }

 private:
  Kind kind_;
  std::string field_path_;
};

}  // namespace islm
