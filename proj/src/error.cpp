#include "absurf/error.hpp"

namespace absurf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IncompatibleRadicands: return "IncompatibleRadicands";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PerfectSquare: return "PerfectSquare";
    case ErrorKind::NotAmple: return "NotAmple";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::MultiplicityTooSmall: return "MultiplicityTooSmall";
    case ErrorKind::EpsOutOfRange: return "EpsOutOfRange";
    case ErrorKind::ParameterOrderViolation: return "ParameterOrderViolation";
    case ErrorKind::InvalidPolygon: return "InvalidPolygon";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IncompatibleRadicands:
    case ErrorKind::DivisionByZero:
    case ErrorKind::InvalidPolygon:
    case ErrorKind::IoError:
      return false;
    default:
      return true;
  }
}

}  // namespace absurf
