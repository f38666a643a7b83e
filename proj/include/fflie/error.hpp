#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fflie {

/// Single exception type carrying a machine-readable kind tag.
/// Kinds in use: DivisionByZero, FieldMismatch, NoNonsquare, ShapeError,
/// BadParameter, UnsupportedCharacteristic, UnsupportedParameters,
/// NotAnIdeal, BudgetExceeded, NotCertified, SingularMap, IsotopismInvalid,
/// HypothesisFailure, JacobiFailure, ValidationFailure, UnknownSuite, ParseError.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace fflie
