#pragma once

#include <stdexcept>
#include <string>

namespace tg {

enum class ErrorCode {
  ZeroZero,
  InfiniteSlope,
  DivisionByZero,
  NotRationalForm,
  UnboundParam,
  ConstraintViolation,
  Parse,
  NotClosed,
  MultiComponent,
  TooLarge,
  InvalidParams,
  EmptySpec,
  InvalidDiagram,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Position is 1-based; column counts bytes.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorCode::Parse, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace tg
