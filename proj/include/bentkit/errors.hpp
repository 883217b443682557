#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bentkit {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class DependentBasis : public Error {
public:
    using Error::Error;
};

// Raised when an argument exceeds the desk-scale limits an operation supports.
class SizeLimit : public Error {
public:
    using Error::Error;
};

class NotBent : public Error {
public:
    using Error::Error;
};

class OddDimension : public Error {
public:
    using Error::Error;
};

class OddN : public Error {
public:
    using Error::Error;
};

class BadUniformity : public Error {
public:
    using Error::Error;
};

class InvalidMatching : public Error {
public:
    using Error::Error;
};

class InvalidTransversal : public Error {
public:
    using Error::Error;
};

class InvalidSpread : public Error {
public:
    using Error::Error;
};

class NotATransversal : public Error {
public:
    using Error::Error;
};

class NotAPermutation : public Error {
public:
    using Error::Error;
};

class SupportMismatch : public Error {
public:
    using Error::Error;
};

// Post-verification of a constructed function failed. Indicates a bug in the
// construction itself, never an expected runtime condition.
class NotBentInternal : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

}  // namespace bentkit
