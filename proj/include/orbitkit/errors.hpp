#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

// Base class for all library errors.  `code()` is a stable machine-readable
// identifier; `what()` carries a human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define ORBITKIT_DEFINE_ERROR(Name, CodeStr)                         \
  class Name : public Error {                                        \
  public:                                                            \
    explicit Name(const std::string& msg) : Error(CodeStr, msg) {}   \
  }

ORBITKIT_DEFINE_ERROR(DivisionByZero, "division_by_zero");
ORBITKIT_DEFINE_ERROR(DimensionMismatch, "dimension_mismatch");
ORBITKIT_DEFINE_ERROR(Singular, "singular");
ORBITKIT_DEFINE_ERROR(NegativeOrder, "negative_order");
ORBITKIT_DEFINE_ERROR(NotAmenable, "not_amenable");
ORBITKIT_DEFINE_ERROR(BadWitness, "bad_witness");
ORBITKIT_DEFINE_ERROR(DegenerateParameter, "degenerate_parameter");
ORBITKIT_DEFINE_ERROR(RestrictedParameter, "restricted_parameter");
ORBITKIT_DEFINE_ERROR(ZeroParameter, "zero_parameter");
ORBITKIT_DEFINE_ERROR(BadNormalization, "bad_normalization");
ORBITKIT_DEFINE_ERROR(UnknownName, "unknown_name");
ORBITKIT_DEFINE_ERROR(ParseError, "parse_error");
ORBITKIT_DEFINE_ERROR(BadPrime, "bad_prime");

#undef ORBITKIT_DEFINE_ERROR

}  // namespace orbitkit
