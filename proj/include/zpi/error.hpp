#pragma once

#include <stdexcept>
#include <string>

namespace zpi {

// Error taxonomy. Callers that need to distinguish failure modes (the CLI
// exit-code contract, certificate verification, inversion) catch the
// specific type; everything derives from Error so tests can be blunt.

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: group mismatch, malformed data, violated precondition.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Matrix not invertible over the ring it lives in.
class SingularError : public Error {
public:
  explicit SingularError(const std::string& msg) : Error(msg) {}
};

// Operation is only implemented for some group kinds.
class UnsupportedGroupError : public Error {
public:
  explicit UnsupportedGroupError(const std::string& msg) : Error(msg) {}
};

// Configured search/enumeration bound exceeded.
class ResourceBoundError : public Error {
public:
  explicit ResourceBoundError(const std::string& msg) : Error(msg) {}
};

// Floating-point invariant could not be computed reliably.
class NumericalDegeneracyError : public Error {
public:
  explicit NumericalDegeneracyError(const std::string& msg) : Error(msg) {}
};

// Inconsistent seed data for an orbit closure.
class ConflictError : public Error {
public:
  explicit ConflictError(const std::string& msg) : Error(msg) {}
};

}  // namespace zpi
