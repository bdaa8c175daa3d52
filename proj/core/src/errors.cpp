#include "qgalois/errors.hpp"

namespace qgalois {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::InvalidMultiplicity: return "InvalidMultiplicity";
    case ErrorCode::UnsupportedConstant: return "UnsupportedConstant";
    case ErrorCode::InconsistentCase: return "InconsistentCase";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DepthError: return "DepthError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ZeroA: return "ZeroA";
    case ErrorCode::ZeroB: return "ZeroB";
    case ErrorCode::NotARiccati2Solution: return "NotARiccati2Solution";
    case ErrorCode::EqualSolutions: return "EqualSolutions";
    case ErrorCode::NotConjugatePair: return "NotConjugatePair";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotUniqueSolution: return "NotUniqueSolution";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qgalois
