#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mixed index (i, n) fell outside the block structure of a SpaceSpec.
class InvalidIndexError : public Error {
public:
    InvalidIndexError(std::int64_t i, std::int64_t n, const std::string& why)
        : Error("invalid index (i=" + std::to_string(i) + ", n=" + std::to_string(n) +
                "): " + why),
          inner(i), block(n) {}

    std::int64_t inner;
    std::int64_t block;
};

/// A configured size/enumeration cap would be exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// The requested operation is not defined for this space (e.g. extreme
/// points need inner p = infinity).
class UnsupportedSpaceError : public Error {
public:
    using Error::Error;
};

/// Coefficient recovery failed (singular biorthogonal system).
class RecoveryError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed; signals a bug, not bad input.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// Malformed CLI/config input.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace gbl
