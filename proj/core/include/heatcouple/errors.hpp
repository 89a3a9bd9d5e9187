#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heatcouple {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configuration or input violates a documented invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A constitutive evaluation outside its domain (e.g. T <= 0 with non-integer a).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative method (Newton, fixed point, BiCGSTAB) ran out of iterations.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

/// A direct or iterative linear solve could not proceed.
class LinearSolverError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public LinearSolverError {
public:
    using LinearSolverError::LinearSolverError;
};

class BreakdownError : public LinearSolverError {
public:
    using LinearSolverError::LinearSolverError;
};

enum class FailureKind { NonConvergence, LinearSolver, Domain };

/// Failure of a time step inside a run, annotated with where it happened.
class SolverFailure : public Error {
public:
    SolverFailure(FailureKind kind, std::size_t step, double time, const std::string& what)
        : Error(what), kind_(kind), step_(step), time_(time) {}

    FailureKind kind() const noexcept { return kind_; }
    std::size_t step() const noexcept { return step_; }
    double time() const noexcept { return time_; }

private:
    FailureKind kind_;
    std::size_t step_;
    double time_;
};

}  // namespace heatcouple
