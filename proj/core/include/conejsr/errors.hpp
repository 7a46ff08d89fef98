#pragma once

#include <stdexcept>
#include <string>

namespace conejsr {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands have incompatible dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A value violates a domain precondition (negative coordinate, zero vector
/// where an interior point is required, bad tolerance, ...).
class InvalidValue : public Error {
 public:
  using Error::Error;
};

/// An asymptotic limit was requested for an expression shape outside the
/// supported symbolic catalog.  Numeric limits are never substituted silently.
class NoClosedForm : public Error {
 public:
  using Error::Error;
};

/// Power iteration produced the zero vector.
class CollapsedOrbit : public Error {
 public:
  using Error::Error;
};

/// The candidate product's dominant eigenvector lies on the cone boundary,
/// so the polytope construction cannot start from it.
class BoundaryEigenvector : public Error {
 public:
  using Error::Error;
};

/// A family/certificate file does not match the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace conejsr
