#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nctorus {

/// Base class for all library errors. CLI maps these to exit code 2.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the operation's domain (g = 0, non-unit phase, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Matrix dimensions do not match what the operation requires.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Integer result would not fit the return type.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// Rational angle denominator does not divide the requested grid.
class GridMismatchError : public Error {
  public:
    using Error::Error;
};

/// Operation requested on a structure the module deliberately does not
/// support (generators beyond rank 2, inverse letters in relations).
class UnsupportedError : public Error {
  public:
    using Error::Error;
};

/// Sklyanin parameter set violates the defining constraint.
class InvalidParametersError : public Error {
  public:
    using Error::Error;
};

/// 1 + alpha*beta = 0 with alpha + beta != 0: no finite gamma exists.
class SingularParameterError : public Error {
  public:
    using Error::Error;
};

/// A Jacobi-form coefficient has a vanishing denominator.
class PoleError : public Error {
  public:
    PoleError(const std::string& msg, const std::string& coefficient)
        : Error(msg), coefficient_(coefficient) {}

    /// "c1" (beta = -1) or "c2" (gamma = 1).
    const std::string& coefficient() const { return coefficient_; }

  private:
    std::string coefficient_;
};

/// Malformed textual input (polynomial expressions, rationals, config).
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Iterative root extraction hit its cap; carries the best iterates.
class RootConvergenceError : public Error {
  public:
    RootConvergenceError(const std::string& msg,
                         std::vector<std::complex<double>> best)
        : Error(msg), best_(std::move(best)) {}

    const std::vector<std::complex<double>>& best_iterates() const { return best_; }

  private:
    std::vector<std::complex<double>> best_;
};

/// A report did not contain enough converged samples to analyze.
class InsufficientDataError : public Error {
  public:
    using Error::Error;
};

}  // namespace nctorus
