#pragma once

#include <stdexcept>
#include <string>

namespace algcut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (repeated weights, a
/// non-regular level, a zero tangent weight, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A truncated series does not carry enough known coefficients to answer
/// the query exactly. Callers may retry at a higher working order.
class PrecisionError : public Error {
public:
    using Error::Error;
};

} // namespace algcut
