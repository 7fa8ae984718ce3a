#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoconn {

enum class ErrorCode {
  NonSymmetric,
  NonFinite,
  NotBijection,
  NotSquare,
  OrderTooSmall,
  OrderTooLarge,
  OrderMismatch,
  NoConvergence,
  InvalidConfiguration,
  CoincidentAgents,
  NotLaplacian,
  DegenerateFiedler,
  InvalidTransform,
  InvalidVariation,
  IndexOutOfRange,
  NonPositiveParameter,
  NegativeDiscriminant,
  EmptyGrid,
  InvalidArgument,
  ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isoconn
