#pragma once

#include <stdexcept>
#include <string>

namespace relgnn {

/// Base class for all library errors. The CLI maps subclasses onto exit
/// codes: IoError -> 1, validation-family errors -> 2, NumericError -> 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor shapes do not line up for the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input data violates a documented contract (bad labels, conflicting
/// priors, out-of-range intensities, inconsistent configs, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A value that must be finite came out NaN/Inf, or a numeric check failed.
class NumericError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed text input; message carries line/byte location where known.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Requested configuration is internally impossible (e.g. hidden dim
/// smaller than annotation dim).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Metric is undefined for the given inputs (e.g. AUC on single-class truth).
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

}  // namespace relgnn
