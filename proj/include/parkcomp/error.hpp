#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parkcomp {

enum class ErrorKind {
  OutOfRange,
  NotStrictlyIncreasing,
  NotWeaklyIncreasing,
  NonPositiveEntry,
  LengthMismatch,
  CapExceeded,
  InvalidBlock,
  BlockCountMismatch,
  PartsSumMismatch,
  ParameterOutOfRange,
  InvalidLabeling,
  DegenerateSignature,
  NotCornered,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can tell input errors apart from internal inconsistencies.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace parkcomp
