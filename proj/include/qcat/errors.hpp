#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

/// Malformed input: bad ids, violated preconditions, inconsistent tables.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by exact hom-set enumeration when the edge graph has a directed cycle.
class NotLoopFree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search was refused because the input exceeds the configured limit.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive argument's runtime assertion did not hold.
class ConstructionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qcat
