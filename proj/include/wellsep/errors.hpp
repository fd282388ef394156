#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wellsep {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violated an operation's precondition (bad dimension, bad flag value, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Iterative solver did not reach its target.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}

    /// Residual measure reached when the iteration stopped.
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// Disc contains or touches the origin (a <= r1).
class DegenerateDisc : public Error {
public:
    using Error::Error;
};

/// Condition bound denominator n^3 - 3kn^2 - 3k^2 is not positive.
class InvalidRegime : public Error {
public:
    using Error::Error;
};

class ZeroEigenvalue : public Error {
public:
    using Error::Error;
};

class CoincidentCenter : public Error {
public:
    using Error::Error;
};

/// Perron seed shift equals (numerically) a diagonal entry.
class ShiftCollision : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnsupportedField : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace wellsep
