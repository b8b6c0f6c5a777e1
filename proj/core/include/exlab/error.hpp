#pragma once

#include <stdexcept>
#include <string>

namespace exlab {

/// Raised when an operation's precondition is breached by its inputs
/// (out-of-range vertex, mis-sized assignment, malformed label, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace exlab
