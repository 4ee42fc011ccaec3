#pragma once

#include <stdexcept>
#include <string>

namespace spanzip {

// Stable error codes so the CLI can emit machine-parsable failures.
enum class ErrorCode {
  MalformedJson,
  MissingName,
  KeyCollision,
  StructuralLocalityViolation,
  Frozen,
  UnknownIdentifier,
  SequenceGap,
  DuplicatePathId,
  UnknownPathId,
  ArityMismatch,
  ProtocolViolation,
  BadMagic,
  BadVersion,
  SessionClosed,
  StageFailure,
  EmptyCorpus,
  InfeasibleSpec,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spanzip
