#pragma once

#include <stdexcept>
#include <string>

namespace sg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PartNotPresent : Error {
    using Error::Error;
};
struct SizeMismatch : Error {
    using Error::Error;
};
struct EmptyShape : Error {
    using Error::Error;
};
struct DegreeTooSmall : Error {
    using Error::Error;
};
struct RankTooSmall : Error {
    using Error::Error;
};
struct InvalidLabel : Error {
    using Error::Error;
};
struct InvalidParabolic : Error {
    using Error::Error;
};
struct InvalidJordanType : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

// Raised when an internal consistency check fails; always indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace sg
