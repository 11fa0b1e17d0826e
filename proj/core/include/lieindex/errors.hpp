#pragma once

#include <stdexcept>
#include <string>

namespace lieindex {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters or malformed input (wrong dimensions, parity, ranges).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input text (JSON, rationals) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed a configured size ceiling.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Certified (symbolic) rank was requested above the size gate.
class CertifyGateError : public Error {
 public:
  using Error::Error;
};

/// Structure constants violate the Jacobi identity.
class JacobiError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed; always indicates a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace lieindex
