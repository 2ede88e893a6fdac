#pragma once

#include <stdexcept>
#include <string>

namespace gpdom {

enum class ErrorCode {
  InvalidParameter,
  InvalidFault,
  InvalidEdge,
  InvalidVertex,
  InvalidSet,
  SizeLimit,
  InvalidExchange,
  RejectedExchange,
  Contradiction,
  NotApplicable,
  InfeasiblePattern,
  ConstructionBug,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gpdom
