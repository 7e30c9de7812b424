#include "tanglegraph/error.hpp"

namespace tg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroZero: return "ZeroZero";
    case ErrorCode::InfiniteSlope: return "InfiniteSlope";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotRationalForm: return "NotRationalForm";
    case ErrorCode::UnboundParam: return "UnboundParam";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::MultiComponent: return "MultiComponent";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
  }
  return "Unknown";
}

}  // namespace tg
