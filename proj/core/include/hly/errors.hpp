#pragma once

#include <stdexcept>
#include <string>

namespace hly {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (scalar strings, JSON documents, index lists).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Structurally well-formed input that violates a type invariant
/// (parity pattern, dimension mismatch, duplicate sparse entry, ...).
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A consistency condition the library guarantees internally was observed
/// to fail (e.g. a coboundary outside the cocycle space). Indicates a bug,
/// never a property of the input.
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

/// Filesystem failure: missing file, unreadable path, failed write.
struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace hly
