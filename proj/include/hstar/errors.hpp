#pragma once

#include <stdexcept>
#include <string>

namespace hstar {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gamma-type evaluation hit a pole (argument at a non-positive integer,
// or a continuation pole of an eigenvalue formula).
struct PoleError : Error {
    using Error::Error;
};

// sigma = 0 is outside the admissible parameter range of the calculus.
struct InvalidSigma : Error {
    using Error::Error;
};

// Two symbols (or a symbol and a constants context) disagree on (n, sigma)
// or on the basis convention.
struct ContextMismatch : Error {
    using Error::Error;
};

// Requested an operation for an ambient dimension the module does not
// support (grids and bases are n = 3 only).
struct UnsupportedDimension : Error {
    using Error::Error;
};

// A vector that must be L2-normalized is not.
struct NotNormalized : Error {
    using Error::Error;
};

// A kernel was requested outside the absolutely convergent regime of the
// defining integral.
struct ConvergenceRegime : Error {
    using Error::Error;
};

// Malformed input file (symbol JSON, etc.). The message names the field.
struct ParseError : Error {
    using Error::Error;
};

} // namespace hstar
