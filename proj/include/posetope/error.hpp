#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace posetope {

enum class ErrorCode {
  CycleDetected,
  UnknownLabel,
  DuplicateLabel,
  TooLarge,
  IndexOutOfRange,
  NotClassifiable,
  NotMinimalNonMaximal,
  VertexOutsidePolytope,
  NotFullDimensional,
  DimensionMismatch,
  NotSquare,
  NotUnimodular,
  ForbiddenSubposetPresent,
  InternalInconsistency,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace posetope
