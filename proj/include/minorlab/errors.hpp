#pragma once

#include <stdexcept>
#include <string>

namespace minorlab {

// Thrown when an input exceeds a documented size cap of an exact routine.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minorlab
