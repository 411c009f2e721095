#include "tverberg/error.hpp"

namespace tverberg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "usage error";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::UndefinedAngle: return "undefined angle";
    case ErrorKind::DegenerateSegment: return "degenerate segment";
    case ErrorKind::RadialDegeneracy: return "radial degeneracy";
    case ErrorKind::RepresentativeDegeneracy: return "representative degeneracy";
    case ErrorKind::ArcHellyFailure: return "arc Helly failure";
    case ErrorKind::Stalled: return "stalled";
    case ErrorKind::SearchFailed: return "search failed";
    case ErrorKind::PerturbFailed: return "perturbation failed";
    case ErrorKind::LpCycling: return "simplex cycling";
    case ErrorKind::TheoremViolation: return "theorem violation";
    case ErrorKind::ProofViolation: return "proof violation";
  }
  return "unknown error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace tverberg
