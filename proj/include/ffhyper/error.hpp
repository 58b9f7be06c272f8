#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffhyper {

/// Failure taxonomy shared by the library, the CLI and the sweep reports.
enum class ErrorKind {
  InvalidInput,
  NotPrime,
  SizeOverflow,
  NoDiscreteLog,
  DivisionByZero,
  NotApplicable,
  WrongCongruence,
  ZeroA,
  ZeroC,
  ZeroF,
  NonResidue,
  NoNonzeroRoot,
  Singular,
  ExcludedQ,
  CharacteristicThree,
  PrecisionFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ffhyper
