#include "walkinv/error.hpp"

namespace walkinv {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::Truncation: return "Truncation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace walkinv
