#pragma once

#include <stdexcept>
#include <string>

namespace alphabit {

// Exit-code categories used by the CLI: ConfigError -> 1, DataError -> 2,
// anything else -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

struct ParseError : DataError {
    using DataError::DataError;
};

struct DuplicateKeyError : DataError {
    using DataError::DataError;
};

struct InsufficientDataError : DataError {
    using DataError::DataError;
};

struct EmptyPanelError : DataError {
    using DataError::DataError;
};

struct SingularFitError : DataError {
    using DataError::DataError;
};

struct DegenerateTargetError : DataError {
    using DataError::DataError;
};

struct DegenerateVarianceError : DataError {
    using DataError::DataError;
};

struct SizeError : Error {
    using Error::Error;
};

struct ModelNotAnnotatedError : Error {
    using Error::Error;
};

} // namespace alphabit
