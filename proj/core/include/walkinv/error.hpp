#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace walkinv {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  Disconnected,
  VertexOutOfRange,
  SizeTooSmall,
  NTooLarge,
  IndexOutOfRange,
  DimensionMismatch,
  SingularMatrix,
  NotATree,
  NotAnEdge,
  FormulaMismatch,
  Truncation,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message holds the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace walkinv
