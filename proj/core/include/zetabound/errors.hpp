#pragma once

#include <stdexcept>
#include <string>

namespace zetabound {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (w <= 0,
// sigma <= 0 where positivity is required, malformed intervals, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// s fell inside the numerical guard band around the pole at s = 1.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// A configuration or range parameter is invalid (table index out of range,
// non-positive term counts, modulus outside the supported range, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// An intermediate or final quantity left the binary64 range.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace zetabound
