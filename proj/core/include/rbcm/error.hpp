#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rbcm {

/// Domain failures raised by the library. The CLI prints `name()` verbatim.
enum class ErrorKind {
  NotAUnit,
  NotCoprime,
  NotPrime,
  ModulusMismatch,
  NonUnitLeading,
  NotInBaseField,
  NotSimpleFactor,
  TooLarge,
  NotAdmissible,
  DegenerateOmega,
  InvalidMap,
  TypeMismatch,
  DuplicatePrime,
  ComponentNotAdmissible,
  NotComposable,
  InvalidArgument,
  InternalMismatch,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NonUnitLeading: return "NonUnitLeading";
    case ErrorKind::NotInBaseField: return "NotInBaseField";
    case ErrorKind::NotSimpleFactor: return "NotSimpleFactor";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::DegenerateOmega: return "DegenerateOmega";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::DuplicatePrime: return "DuplicatePrime";
    case ErrorKind::ComponentNotAdmissible: return "ComponentNotAdmissible";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace rbcm
