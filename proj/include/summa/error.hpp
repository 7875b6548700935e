#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace summa {

enum class ErrorCode {
  InvalidResolution,
  UnknownCorpusEntry,
  FrequencyOutOfRange,
  ImaginaryResidue,
  NotAGridPoint,
  InvalidExponent,
  InvalidThreshold,
  InvalidScale,
  InvalidFamily,
  LevelTooLow,
  InvalidDilation,
  BisectionFailure,
  DomainError,
  DominationFailure,
  InvalidArgument,
  InvariantViolation,
  Io,
};

/// Stable kebab-case identifier, used in CLI error records.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace summa
