#pragma once

#include <stdexcept>
#include <string>

namespace poisson_zeta {

/// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside an operation's precondition (e.g. Re(s) < 4, r < 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The linear system is too ill-conditioned for the requested precision.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle would need more work than its configured cap allows.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace poisson_zeta
