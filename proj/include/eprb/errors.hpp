#pragma once

#include <stdexcept>
#include <string>

namespace eprb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise out-of-domain numeric input.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters or option combinations supplied by the caller.
class UsageError : public Error {
public:
    using Error::Error;
};

/// The requested operation is not defined for the chosen source model.
class ModelError : public Error {
public:
    using Error::Error;
};

/// Malformed input data, e.g. an unnormalized probability table.
class DataError : public Error {
public:
    using Error::Error;
};

/// A computed quantity violated an analytic guarantee; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

/// An integrand produced a non-finite value while being averaged.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, double theta)
        : Error(what), theta_(theta) {}

    double theta() const noexcept { return theta_; }

private:
    double theta_;
};

/// Failure to read or write a file.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace eprb
