#pragma once

#include <stdexcept>
#include <string>

namespace pursuit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a closed form (e.g. nu not in (0,1)).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Direction requested between coincident points.
class DegenerateDirection : public Error {
public:
    using Error::Error;
};

/// Raised by feedback strategies when the players already coincide.
class CaptureAlready : public Error {
public:
    using Error::Error;
};

class SlowerPursuer : public Error {
public:
    using Error::Error;
};

class BudgetViolation : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

/// Query outside the region a formula covers (e.g. nu*rho0 <= sqrt(1+nu^2)*r_cap for n*).
class RegionNotCovered : public Error {
public:
    using Error::Error;
};

class EnumerationCap : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace pursuit
