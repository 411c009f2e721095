#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tverberg {

enum class ErrorKind {
  Usage,
  Parse,
  UndefinedAngle,
  DegenerateSegment,
  RadialDegeneracy,
  RepresentativeDegeneracy,
  ArcHellyFailure,
  Stalled,
  SearchFailed,
  PerturbFailed,
  LpCycling,
  TheoremViolation,
  ProofViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace tverberg
