#pragma once

#include <stdexcept>
#include <string>

namespace qgalois {

enum class ErrorCode {
  ZeroInput,
  InvalidMultiplicity,
  UnsupportedConstant,
  InconsistentCase,
  InvalidField,
  DepthError,
  SyntaxError,
  ZeroA,
  ZeroB,
  NotARiccati2Solution,
  EqualSolutions,
  NotConjugatePair,
  PreconditionViolated,
  NotUniqueSolution,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when a required constant (e.g. a boundary root) lies outside the
// configured tower. Carries the minimal polynomial as text.
class UnsupportedConstant : public Error {
 public:
  UnsupportedConstant(const std::string& what, std::string minpoly)
      : Error(ErrorCode::UnsupportedConstant, what), minpoly_(std::move(minpoly)) {}
  const std::string& minimal_polynomial() const { return minpoly_; }

 private:
  std::string minpoly_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace qgalois
