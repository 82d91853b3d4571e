#pragma once

#include <stdexcept>
#include <string>

namespace capra {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact and floating-point values met in one expression.
struct ModeMismatchError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

/// A norm value was requested that the current mode cannot represent,
/// e.g. an exact Euclidean norm (use norm_squared or the float path).
struct NormError : Error {
    using Error::Error;
};

struct InvalidInputError : Error {
    using Error::Error;
};

struct SchemaError : Error {
    using Error::Error;
};

/// A certificate failed re-verification; signals an internal inconsistency.
struct CertificateError : Error {
    using Error::Error;
};

}  // namespace capra
