#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitfem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class MalformedMesh : public Error {
public:
    using Error::Error;
};

class MalformedBoundary : public Error {
public:
    using Error::Error;
};

/// Mesh or config text that could not be parsed; carries the 1-based line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class PreconditionFailure : public Error {
public:
    using Error::Error;
};

/// Iterative solver ran out of iterations; carries the final relative residual.
class IterationLimit : public Error {
public:
    IterationLimit(const std::string& what, double residual)
        : Error(what + " (relative residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// The linear system is singular or the iteration broke down.
class Breakdown : public Error {
public:
    using Error::Error;
};

class InvalidSystem : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class MarginalRoot : public Error {
public:
    using Error::Error;
};

class DegenerateQuadratic : public Error {
public:
    DegenerateQuadratic(const std::string& what, double linear_root)
        : Error(what), linear_root_(linear_root) {}
    /// Root of the remaining linear equation.
    double linear_root() const { return linear_root_; }

private:
    double linear_root_;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

/// A non-finite value appeared during time stepping.
class NumericalBlowup : public Error {
public:
    NumericalBlowup(const std::string& what, long step)
        : Error(what + " at step " + std::to_string(step)), step_(step) {}
    long step() const { return step_; }

private:
    long step_;
};

class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace splitfem
