#pragma once

#include <stdexcept>
#include <string>

namespace photomap {

// Base of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable files, undecodable images, unwritable outputs.
struct IoError : Error {
    using Error::Error;
};

// Bad configuration values, unknown config keys.
struct ConfigError : Error {
    using Error::Error;
};

// Inputs that violate an operation's data contract.
struct DataError : Error {
    using Error::Error;
};

// Constant (zero-spectrum) rasters that cannot be correlated.
struct DegenerateInput : DataError {
    using DataError::DataError;
};

struct SizeMismatch : DataError {
    using DataError::DataError;
};

struct ScaleOutOfRange : DataError {
    using DataError::DataError;
};

struct EmptySequence : DataError {
    using DataError::DataError;
};

struct EmptyCanvas : DataError {
    using DataError::DataError;
};

struct InvalidDt : DataError {
    using DataError::DataError;
};

// Malformed text input; carries the 1-based line number.
struct ParseError : DataError {
    ParseError(const std::string& what, int line)
        : DataError("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

}  // namespace photomap
