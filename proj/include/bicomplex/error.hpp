#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicomplex {

enum class ErrorKind {
  Syntax,
  UnknownVariable,
  UnknownFunction,
  InvalidArgument,
  EvalDomain,
  NonInvertible,
  OutOfDomain,
  ComponentMismatch,
  NotHarmonic,
  DegenerateKernel,
  OutOfHalfPlane,
  RepresentationMismatch,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnknownFunction: return "UnknownFunction";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EvalDomain: return "EvalDomain";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ComponentMismatch: return "ComponentMismatch";
    case ErrorKind::NotHarmonic: return "NotHarmonic";
    case ErrorKind::DegenerateKernel: return "DegenerateKernel";
    case ErrorKind::OutOfHalfPlane: return "OutOfHalfPlane";
    case ErrorKind::RepresentationMismatch: return "RepresentationMismatch";
  }
  return "Error";
}

/// Every failure raised by the library carries a kind so front ends can map
/// it onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::Syntax, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  /// Byte offset into the source text where parsing stopped.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace bicomplex
