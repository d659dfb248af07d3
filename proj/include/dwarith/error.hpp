#pragma once

#include <stdexcept>
#include <string>

namespace dwarith {

enum class ErrorCode {
  NotAGroup,
  GeneratorsDontGenerate,
  DegreeTooLow,
  NotACocycle,
  MismatchedFiber,
  ModelViolation,
  ReciprocityViolation,
  BetaDependence,
  ModulusMismatch,
  BaseMismatch,
  InvalidWitness,
  SchemaError,
  DanglingReference,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace dwarith
