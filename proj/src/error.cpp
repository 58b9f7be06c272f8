#include "ffhyper/error.hpp"

namespace ffhyper {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::NoDiscreteLog: return "NoDiscreteLog";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::WrongCongruence: return "WrongCongruence";
    case ErrorKind::ZeroA: return "ZeroA";
    case ErrorKind::ZeroC: return "ZeroC";
    case ErrorKind::ZeroF: return "ZeroF";
    case ErrorKind::NonResidue: return "NonResidue";
    case ErrorKind::NoNonzeroRoot: return "NoNonzeroRoot";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ExcludedQ: return "ExcludedQ";
    case ErrorKind::CharacteristicThree: return "CharacteristicThree";
    case ErrorKind::PrecisionFailure: return "PrecisionFailure";
  }
  return "Unknown";
}

}  // namespace ffhyper
