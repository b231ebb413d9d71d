#pragma once

#include <stdexcept>
#include <string>

namespace mexkit {

/// Bad arguments from a caller: mismatched truncation orders, violated
/// preconditions, out-of-range request parameters.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force request beyond the configured enumeration bound.
class BoundError : public UsageError {
public:
    using UsageError::UsageError;
};

/// Division by (or log/sqrt of) a series whose constant term does not allow it.
class SeriesDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two computation routes produced different values for the same quantity.
class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mexkit
