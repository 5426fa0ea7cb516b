#pragma once

#include <stdexcept>
#include <string>

namespace conductor {

// Raised when a structural invariant that the underlying theory guarantees
// fails to hold; reaching this means the kernel has a bug, not the input.
class internal_check_error : public std::logic_error {
 public:
  explicit internal_check_error(const std::string& what) : std::logic_error(what) {}
};

// Raised when an exhaustive verification run finds a disagreement.  The
// message carries a serialized witness for the offending case.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace conductor
