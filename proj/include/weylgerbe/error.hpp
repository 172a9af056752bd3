#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weylgerbe {

enum class ErrorKind {
  InvalidUnitary,
  InvalidFrame,
  InvalidTangent,
  IndexError,
  FiberMismatch,
  OnBranchCut,
  NotInteger,
  DegreeMismatch,
  ArityMismatch,
  ChartOutOfRange,
  UnknownSuite,
  RankOutOfRange,
};

std::string_view to_string(ErrorKind kind);

/// Raised by every precondition check in the library. The kind is stable and
/// is what tests match on; the message is for humans.
class GerbeError : public std::runtime_error {
 public:
  GerbeError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace weylgerbe
