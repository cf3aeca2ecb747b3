#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covcert {

enum class Errc {
  InvalidArgument,
  DivisionByIntervalContainingZero,
  LogOfNonPositive,
  NonPositiveArgument,
  ArgumentNotGreaterThanOne,
  UnsupportedModulus,
  MalformedCatalog,
  InvariantViolation,
  ChecksumMismatch,
  UnsupportedField,
  UnsupportedArgument,
  DenominatorNotPositive,
  InfeasibleBase,
  NonPositiveT,
  EmptyTable,
  NoFeasiblePoint,
  DataMissing,
  StepFailed,
  SchemaMismatch,
  TamperDetected,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace covcert
