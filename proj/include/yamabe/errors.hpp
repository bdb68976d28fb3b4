#pragma once

#include <stdexcept>
#include <string>

namespace yamabe {

enum class ErrorKind {
  kDomainViolation,  ///< point or FD stencil outside the chart box
  kNonFinite,        ///< evaluation produced NaN/inf
  kDegeneratePoint,  ///< induced metric not positive definite
  kInvalidArgument,
  kPrecondition,     ///< input violates an operation's stated precondition
  kUndefined,        ///< the requested quantity does not exist for this input
  kIndeterminate,    ///< a decision fell inside a tolerance dead band
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace yamabe
