#pragma once

#include <stdexcept>
#include <string>

namespace efx {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (files, JSON, construction args).
class ParseError : public Error {
public:
  using Error::Error;
};

// A documented structural requirement is not met (valuation classes,
// monotonicity, degeneracy without perturbation, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A configured enumeration limit would be exceeded.
class CapError : public Error {
public:
  using Error::Error;
};

// An internal invariant was violated. Always a bug, never swallowed.
class InternalError : public Error {
public:
  using Error::Error;
};

// Exact-integer arithmetic left the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

}  // namespace efx
