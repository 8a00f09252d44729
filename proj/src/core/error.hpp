#pragma once

#include <stdexcept>
#include <string>

namespace zefav {

enum class ErrorCode {
  Io,
  Config,
  Schema,
  Label,
  CountMismatch,
  Span,
  EmptyEntity,
  EmptyCatalog,
  Backend,
  ReplayMiss,
  ResponseMalformed,
  DuplicateDigest,
  MissingExamples,
  NothingToVerify,
  MismatchedInputs,
  Alignment,
  DuplicateConfig,
  Invalid,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace zefav
