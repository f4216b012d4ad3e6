#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagbound {

// Base class so callers can catch everything the library throws in one place.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph strings, certificates, manifests, solver
// output). Carries the byte offset where scanning gave up.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  explicit ParseError(const std::string& what) : Error(what), position(0) {}
  std::size_t position;
};

// Request exceeds a hard size limit (vertex count, matrix dimension).
struct CapacityError : Error {
  using Error::Error;
};

// Structurally well-formed input that violates an operation's requirements:
// out-of-range vertices, type mismatches, dimension mismatches.
struct InputError : Error {
  using Error::Error;
};

// Filesystem trouble (missing file, unwritable path).
struct IoError : Error {
  using Error::Error;
};

}  // namespace flagbound
