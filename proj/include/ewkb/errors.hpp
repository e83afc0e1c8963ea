#pragma once

#include <stdexcept>
#include <string>

namespace ewkb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed series, violated preconditions. CLI exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A z^{-1} term would have to be integrated.
class LogObstruction : public Error {
public:
    using Error::Error;
};

// Exponent not representable on the series lattice.
class LatticeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DivisionByZeroSeries : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotSimpleTurningPoint : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Numeric failures, CLI exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

class ContourFailure : public NumericError {
public:
    using NumericError::NumericError;
};

class PoleOnRay : public NumericError {
public:
    using NumericError::NumericError;
};

class DomainExit : public NumericError {
public:
    using NumericError::NumericError;
};

class TraceEscape : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace ewkb
