#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Thrown when an operation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a spectrum cannot be explained by any 0/1 characteristic vector.
class InconsistentSpectrumError : public std::runtime_error {
 public:
  explicit InconsistentSpectrumError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cayley
