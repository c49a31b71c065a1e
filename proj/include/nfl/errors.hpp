#pragma once

#include <stdexcept>
#include <string>

namespace nfl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates the invariants of the type it was meant to build.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two objects that must share a (|X|, |Y|) signature do not.
class SignatureMismatch : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed its configured cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A search algorithm proposed a visited or out-of-range point.
class ProtocolViolation : public Error {
public:
    using Error::Error;
};

/// Malformed input document; the message carries the line or field path.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace nfl
