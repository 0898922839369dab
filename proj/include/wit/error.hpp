#pragma once

#include <stdexcept>
#include <string>

namespace wit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-side contract was violated (bad argument, bad shape).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A name was not found in the catalog.
class UnknownNameError : public Error {
public:
    using Error::Error;
};

/// Quadrature or a support search did not reach its target.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A quantity that must be finite is not (e.g. admissibility of a non-zero-mean function).
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// A truncated CWT grid captured too little of the joint density's mass.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace wit
