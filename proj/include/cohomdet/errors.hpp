#pragma once

#include <stdexcept>
#include <string>

namespace cohomdet {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes or variable counts that do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An argument outside the operation's domain (division by zero, bad sign, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A tensor or instance that violates the symmetry or structural rules of its kind.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input (JSON or polynomial text).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised when an exact quotient does not exist.
class NotDivisibleError : public Error {
public:
    using Error::Error;
};

/// Raised when the struck minors of a theta matrix do not share one determinant.
class InconsistentMinorsError : public Error {
public:
    using Error::Error;
};

class UnknownNameError : public Error {
public:
    using Error::Error;
};

}  // namespace cohomdet
