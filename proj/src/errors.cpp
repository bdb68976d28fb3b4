#include "yamabe/errors.hpp"

namespace yamabe {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomainViolation: return "domain_violation";
    case ErrorKind::kNonFinite: return "non_finite";
    case ErrorKind::kDegeneratePoint: return "degenerate_point";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kUndefined: return "undefined";
    case ErrorKind::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

}  // namespace yamabe
