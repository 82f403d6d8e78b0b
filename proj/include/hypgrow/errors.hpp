#ifndef HYPGROW_ERRORS_HPP
#define HYPGROW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypgrow {

// Base class for all library errors so callers can catch them in one place.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A point that was required to lie inside the domain does not.
class OutsideDomainError : public Error {
public:
  using Error::Error;
};

// Degenerate geometric input (zero-length axis, coincident angle vertex, ...).
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

// tan() applied at or beyond its pole (sigma with s -> 1, tau with v -> pi).
class OverflowError : public Error {
public:
  using Error::Error;
};

// The boundary lies on a single sphere or hyperplane; the Apollonian
// construction degenerates there.
class DegenerateBoundaryError : public Error {
public:
  using Error::Error;
};

// Grid approximation of the quasihyperbolic metric could not connect the
// endpoints at the requested resolution.
class DisconnectedGridError : public Error {
public:
  using Error::Error;
};

// Richardson extrapolation failed to settle within its tolerance.
class NonConvergenceError : public Error {
public:
  using Error::Error;
};

// An operation precondition was violated (bad parameter, wrong domain kind).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A boundary functional produced a NaN or infinity at a finite sample.
class NonFiniteValueError : public Error {
public:
  using Error::Error;
};

// Malformed or unknown structured input (domain records, CSV).
class ParseError : public Error {
public:
  using Error::Error;
};

// A file could not be opened, written, or moved into place.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace hypgrow

#endif
