#pragma once

#include <stdexcept>
#include <string>

namespace ringlex {

// Base class for every error raised by the library. Each subclass maps to
// one CLI exit code (see cli.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands belong to different rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

// Vector lengths disagree.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

// Lee/Euclidean metric requested on a ring that only supports Hamming.
class UnsupportedMetric : public Error {
public:
    using Error::Error;
};

// Argument outside the operation's domain (non-unit inverse, bad exponent...).
class DomainError : public Error {
public:
    using Error::Error;
};

// An exhaustive enumeration would exceed the configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Basis vectors do not generate R^n.
class InvalidBasis : public Error {
public:
    using Error::Error;
};

// Selection criterion is not (declared) multiplicative.
class NonMultiplicative : public Error {
public:
    using Error::Error;
};

// Minimum distance of the zero code.
class UndefinedDistance : public Error {
public:
    using Error::Error;
};

// Malformed text input (vectors, basis files, fixtures).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ringlex
