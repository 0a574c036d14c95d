#ifndef ABSURF_ERROR_HPP
#define ABSURF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace absurf {

enum class ErrorKind {
  IncompatibleRadicands,
  NegativeRadicand,
  DivisionByZero,
  PerfectSquare,
  NotAmple,
  NonPositiveLength,
  MultiplicityTooSmall,
  EpsOutOfRange,
  ParameterOrderViolation,
  InvalidPolygon,
  InvalidSpec,
  UnsupportedSpec,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by malformed or out-of-domain input (CLI exit code 2);
/// the rest are computation failures (exit code 3).
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace absurf

#endif  // ABSURF_ERROR_HPP
