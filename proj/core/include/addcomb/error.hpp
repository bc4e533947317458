#pragma once

#include <stdexcept>
#include <string>

namespace addcomb {

/// Thrown when a documented operation precondition is violated by the caller.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when an exact computation would exceed its configured cost cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a result contradicts a proven guarantee; indicates a bug or a
/// numerical anomaly, never a caller mistake.
class InternalAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace addcomb
