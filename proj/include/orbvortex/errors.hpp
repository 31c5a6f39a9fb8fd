#pragma once

#include <stdexcept>

namespace orbvortex {

// Invalid input data: bad construction arguments, malformed specs,
// mismatched surfaces. The CLI maps these to exit code 1.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : ValidationError {
    using ValidationError::ValidationError;
};

struct NotCoprimeError : ValidationError {
    using ValidationError::ValidationError;
};

struct NoConePointsError : ValidationError {
    using ValidationError::ValidationError;
};

struct SurfaceMismatchError : ValidationError {
    using ValidationError::ValidationError;
};

struct NotSmoothError : ValidationError {
    using ValidationError::ValidationError;
};

// A computed value violated an invariant that holds by construction.
// The CLI maps these to exit code 2.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace orbvortex
