#pragma once

#include <stdexcept>
#include <string>

namespace zmcode {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto distinct exit statuses.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Modulus outside [2, kMaxModulus].
class UnsupportedModulus : public Error {
public:
    using Error::Error;
};

class NoInverse : public Error {
public:
    using Error::Error;
};

// Shape, length, modulus or index mismatch between operands.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Generator rows are not a basis, or k is not in [1, n).
class InvalidGenerator : public Error {
public:
    using Error::Error;
};

// A brute-force enumeration or table would exceed its configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Two distinct error patterns of weight <= t share a syndrome, so t exceeds
// the correction capacity of the code.
class DuplicateSyndrome : public Error {
public:
    using Error::Error;
};

// Malformed code description or vector text.
class ParseError : public Error {
public:
    using Error::Error;
};

// A checked certificate failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace zmcode
