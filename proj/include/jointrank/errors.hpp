#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jointrank {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input data violates a documented precondition (group sizes, level range, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Structured input is missing a required element (e.g. a CSV column).
class SchemaError : public Error {
public:
    using Error::Error;
};

// A cell could not be parsed; carries the 1-based data row index.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t row)
        : Error(msg + " (row " + std::to_string(row) + ")"), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

// Numerical failure: singular matrix, divergent solve, unreachable accuracy.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace jointrank
