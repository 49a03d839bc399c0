#pragma once

#include <stdexcept>
#include <string>

namespace boxspace {

/// Invalid or inconsistent parameters (non-prime modulus, level out of range, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input excluded by a stated hypothesis of the construction.
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap (elements, vertices, ball size) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required square root does not exist.
class NoResidueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural check failed in a way that indicates an inconsistent input
/// (fibers of different sizes, generators that do not generate, ...).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boxspace
