#include "isoconn/error.hpp"

namespace isoconn {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotBijection: return "NotBijection";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::CoincidentAgents: return "CoincidentAgents";
    case ErrorCode::NotLaplacian: return "NotLaplacian";
    case ErrorCode::DegenerateFiedler: return "DegenerateFiedler";
    case ErrorCode::InvalidTransform: return "InvalidTransform";
    case ErrorCode::InvalidVariation: return "InvalidVariation";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace isoconn
