#pragma once

#include <stdexcept>
#include <string>

namespace hcd {

// Base of every library error. The CLI maps the subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graphs, unknown ids, bad parameters.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Unreadable or malformed input files, unwritable outputs.
class DataError : public Error {
public:
    using Error::Error;
};

// A series (or a residual derived from it) has no variance left.
class DegenerateSeries : public Error {
public:
    explicit DegenerateSeries(const std::string& variable)
        : Error("degenerate series: " + variable), variable_(variable) {}

    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

// Too few effective rows for the requested test.
class InsufficientSamples : public Error {
public:
    using Error::Error;
};

}  // namespace hcd
