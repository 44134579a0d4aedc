#pragma once

#include <stdexcept>
#include <string>

namespace dexc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input.
class ConfigError : public Error {
 public:
    using Error::Error;
};

class FormatError : public Error {
 public:
    using Error::Error;
};

class ValidationError : public Error {
 public:
    using Error::Error;
};

/// Operands belong to different rings.
class RingMismatchError : public Error {
 public:
    using Error::Error;
};

/// Operands live on different boxes or dimensions.
class CompatibilityError : public Error {
 public:
    using Error::Error;
};

// Requests outside the domain where an operation is defined.
class DegreeError : public Error {
 public:
    using Error::Error;
};

class EmptyDomainError : public Error {
 public:
    using Error::Error;
};

class OutOfDomainError : public Error {
 public:
    using Error::Error;
};

class ResourceError : public Error {
 public:
    using Error::Error;
};

}  // namespace dexc
