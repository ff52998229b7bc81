#include "elt/errors.hpp"

namespace elt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotSquareSelection: return "NotSquareSelection";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroLayerNotInvertible: return "ZeroLayerNotInvertible";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::NotSingular: return "NotSingular";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::ZeroLayerEntry: return "ZeroLayerEntry";
    case ErrorKind::NotIntegralDomain: return "NotIntegralDomain";
    case ErrorKind::NoConjugation: return "NoConjugation";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind) {}

namespace {
std::string located(const std::string& message, std::size_t line, std::size_t column) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}
}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(located(message, line, column)), line_(line), column_(column) {}

}  // namespace elt
