#pragma once

#include <stdexcept>
#include <string>

namespace naxes {

// Base class for everything this library throws on bad input or
// degenerate geometry. std::logic_error is reserved for internal
// invariant violations (bugs), never for user input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unsupported field, mixed-field arithmetic.
class FieldError : public Error {
public:
    using Error::Error;
};

// Degenerate geometric or arithmetic input: coincident points, undefined
// ratios, collinear circle points, division by zero and the like.
class MathError : public Error {
public:
    using Error::Error;
};

// Malformed configuration files or scalar literals.
class ParseError : public Error {
public:
    using Error::Error;
};

// Rejection sampling ran out of retries.
class SamplingError : public Error {
public:
    using Error::Error;
};

} // namespace naxes
