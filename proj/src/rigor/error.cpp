#include "covcert/error.hpp"

namespace covcert {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByIntervalContainingZero: return "DivisionByIntervalContainingZero";
    case Errc::LogOfNonPositive: return "LogOfNonPositive";
    case Errc::NonPositiveArgument: return "NonPositiveArgument";
    case Errc::ArgumentNotGreaterThanOne: return "ArgumentNotGreaterThanOne";
    case Errc::UnsupportedModulus: return "UnsupportedModulus";
    case Errc::MalformedCatalog: return "MalformedCatalog";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::ChecksumMismatch: return "ChecksumMismatch";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::UnsupportedArgument: return "UnsupportedArgument";
    case Errc::DenominatorNotPositive: return "DenominatorNotPositive";
    case Errc::InfeasibleBase: return "InfeasibleBase";
    case Errc::NonPositiveT: return "NonPositiveT";
    case Errc::EmptyTable: return "EmptyTable";
    case Errc::NoFeasiblePoint: return "NoFeasiblePoint";
    case Errc::DataMissing: return "DataMissing";
    case Errc::StepFailed: return "StepFailed";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::TamperDetected: return "TamperDetected";
  }
  return "Unknown";
}

}  // namespace covcert
