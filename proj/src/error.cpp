#include "gpdom/error.hpp"

namespace gpdom {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::InvalidFault: return "invalid-fault";
    case ErrorCode::InvalidEdge: return "invalid-edge";
    case ErrorCode::InvalidVertex: return "invalid-vertex";
    case ErrorCode::InvalidSet: return "invalid-set";
    case ErrorCode::SizeLimit: return "size-limit";
    case ErrorCode::InvalidExchange: return "invalid-exchange";
    case ErrorCode::RejectedExchange: return "rejected-exchange";
    case ErrorCode::Contradiction: return "contradiction";
    case ErrorCode::NotApplicable: return "not-applicable";
    case ErrorCode::InfeasiblePattern: return "infeasible-pattern";
    case ErrorCode::ConstructionBug: return "construction-bug";
    case ErrorCode::ParseError: return "parse-error";
  }
  return "unknown";
}

}  // namespace gpdom
