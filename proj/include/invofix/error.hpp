#pragma once

#include <stdexcept>
#include <string>

namespace invofix {

// Caller violated a precondition (bad parameters, mismatched tables, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent computations of the same quantity disagreed.
class OracleMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace invofix
