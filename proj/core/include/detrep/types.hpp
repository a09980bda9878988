#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace detrep {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: shape mismatch, non-finite coefficient, bad argument.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A univariate polynomial whose leading coefficient vanishes.
class DegreeDeflation : public Error {
 public:
  using Error::Error;
};

/// A monomial tree that cannot represent some term of the polynomial.
class CoverageError : public Error {
 public:
  CoverageError(int j, int k)
      : Error("tree does not cover term x^" + std::to_string(j) + " y^" +
              std::to_string(k)),
        j_(j),
        k_(k) {}

  int j() const noexcept { return j_; }
  int k() const noexcept { return k_; }

 private:
  int j_;
  int k_;
};

/// Input for which a construction has no valid branch (zero polynomial, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Delta_0 is numerically singular where a regular problem was required.
class SingularProblem : public Error {
 public:
  using Error::Error;
};

/// The staircase reduction did not terminate.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// The polynomial system does not have finitely many solutions.
class DegenerateSystem : public Error {
 public:
  using Error::Error;
};

/// Requested operation is not available for this input kind.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace detrep
