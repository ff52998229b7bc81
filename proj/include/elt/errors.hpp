#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace elt {

/// Domain error categories raised by the library. The names are stable and
/// are what the CLI prints and what the JSON `error` field carries.
enum class ErrorKind {
  NotSquare,
  SizeBound,
  BadIndex,
  NotSquareSelection,
  DimensionMismatch,
  ZeroLayerNotInvertible,
  NotAField,
  NotSingular,
  InvalidWitness,
  ZeroLayerEntry,
  NotIntegralDomain,
  NoConjugation,
  NotOrthonormal,
  NotOrthogonal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace elt
