#pragma once

#include <stdexcept>
#include <string>

namespace phinlab {

enum class ErrorKind {
  NotAUnit,
  ZeroFrobenius,
  ContextMismatch,
  NotStable,
  NotFree,
  EigenvalueDegeneracy,
  EigenvaluesNotRational,
  NotAFlag,
  WrongGradedRank,
  NotMarked,
  NotStronglyMarked,
  NoPerfectDecomposition,
  IndexOutOfRange,
  SingularConstantTerm,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace phinlab
