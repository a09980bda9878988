#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "detrep/polynomial.hpp"
#include "detrep/twopar.hpp"

namespace detrep {

enum class Linearization { Lin1, Lin2, Auto };

struct SolveOptions {
  /// Auto picks Lin2 for scalar polynomials.
  Linearization linearization = Linearization::Auto;
  int newton_steps = 2;
  /// Fixed relative rank tolerance for the staircase. When unset, the
  /// tolerances in kRankTolLadder are tried in turn until one yields
  /// deg p * deg q roots.
  std::optional<double> rank_tol;
  double cluster_tol = 1e-8;
  /// Bound on the relative residual |f(x,y)| / sum |a_jk| |x|^j |y|^k of
  /// both polynomials after refinement.
  double residual_accept = 1e-6;
  /// Solve the system with x and y interchanged.
  bool swap_variables = false;
  /// Retry once with swapped variables when no candidate is accepted.
  bool swap_retry = true;
};

inline constexpr double kRankTolLadder[] = {1e-8, 1e-10, 1e-6, 1e-12};

struct RootRecord {
  Complex x{0.0};
  Complex y{0.0};
  /// max(|p(x, y)|, |q(x, y)|)
  double residual = 0.0;
  /// Relative residual, see SolveOptions::residual_accept.
  double backward_error = 0.0;
  /// ||J^{-1}||_2, +inf for a singular Jacobian.
  double condition = 0.0;
  double accuracy = 0.0;
  bool refined = false;
  int multiplicity = 1;
};

struct SolveReport {
  /// Accepted, deduplicated roots sorted by accuracy.
  std::vector<RootRecord> roots;
  /// Refined candidates that failed the residual filter.
  std::vector<RootRecord> rejected;
  Index pencil_size_p = 0;
  Index pencil_size_q = 0;
  Index delta_size = 0;
  Index regular_size = 0;
  bool singular = false;
  bool swapped = false;
  double rank_tol = 0.0;
  std::vector<std::string> warnings;
};

/// Pencils for p and q with the requested linearization.
TwoParameterProblem linearize_system(const BivariatePolynomial& p, const BivariatePolynomial& q,
                                     Linearization method);

/// max over p and q of |f(x, y)| / sum |a_jk| |x|^j |y|^k.
double backward_error(const BivariatePolynomial& p, const BivariatePolynomial& q, Complex x,
                      Complex y);

/// Throws DegenerateSystem when p and q share a non-constant factor.
void check_zero_dimensional(const BivariatePolynomial& p, const BivariatePolynomial& q);

SolveReport solve_system_report(const BivariatePolynomial& p, const BivariatePolynomial& q,
                                const SolveOptions& options = {});

std::vector<RootRecord> solve_system(const BivariatePolynomial& p, const BivariatePolynomial& q,
                                     const SolveOptions& options = {});

struct NewtonResult {
  Complex x{0.0};
  Complex y{0.0};
  bool refined = true;
  int iterations = 0;
};

/// Newton's method on (p, q). On a singular Jacobian returns the current
/// iterate with refined = false; stops early on a zero residual.
NewtonResult newton_refine(const BivariatePolynomial& p, const BivariatePolynomial& q, Complex x0,
                           Complex y0, int steps);

/// max(|p|, |q|) * ||J^{-1}||_2 at (x0, y0); +inf when J is singular.
double accuracy_measure(const BivariatePolynomial& p, const BivariatePolynomial& q, Complex x0,
                        Complex y0);

/// ||J^{-1}||_2 = 1 / sigma_min(J).
double inverse_jacobian_norm(const BivariatePolynomial& p, const BivariatePolynomial& q, Complex x0,
                             Complex y0);

}  // namespace detrep
