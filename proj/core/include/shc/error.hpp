#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shc {

enum class ErrorCode {
  InvalidArgument,
  EndpointOutOfRange,
  SelfLoop,
  IsolatedVertex,
  SyntaxError,
  InconsistentHeader,
  ColourOutOfRange,
  BudgetExceeded,
  DegenerateSamples,
  EmptyGroup,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace shc
