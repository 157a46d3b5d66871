#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bqinv {

enum class ErrorKind {
  DimensionMismatch,
  EntryOutOfRange,
  ElementOutOfRange,
  NotABiquandle,
  SyntaxError,
  UnknownOperator,
  DepthExceeded,
  UnboundGenerator,
  SizeMismatch,
  ModulusMismatch,
  EmptyBucket,
  Overflow,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; `kind` lets callers
// (the CLI in particular) map failures onto exit codes without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bqinv
