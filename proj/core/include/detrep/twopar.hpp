#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detrep/pencil.hpp"

namespace detrep {

/// (A1 + x B1 + y C1) u1 = 0, (A2 + x B2 + y C2) u2 = 0.
struct TwoParameterProblem {
  Pencil first;
  Pencil second;
};

/// Operator determinants on the tensor product space:
///   D0 = B1 (x) C2 - C1 (x) B2
///   D1 = C1 (x) A2 - A1 (x) C2
///   D2 = A1 (x) B2 - B1 (x) A2
/// Rectangular after a staircase reduction.
struct DeltaTriple {
  Matrix d0;
  Matrix d1;
  Matrix d2;

  Index rows() const noexcept { return d0.rows(); }
  Index cols() const noexcept { return d0.cols(); }
};

DeltaTriple operator_determinants(const TwoParameterProblem& problem);

/// Kronecker product a (x) b.
Matrix kronecker(const Matrix& a, const Matrix& b);

struct EigenSolution {
  Complex x{0.0};
  Complex y{0.0};
  /// Eigenvector of the (reduced) coupled problem.
  Vector w;
  /// Number of x-eigenvalues in the cluster this solution came from.
  int cluster_size = 1;
};

struct RegularOptions {
  /// |x_i - x_j| <= cluster_tol * max(1, |x_i|) joins two eigenvalues.
  double cluster_tol = 1e-8;
  /// Delta_0 counts as singular when sigma_min <= singular_tol * sigma_max.
  double singular_tol = 1e-13;
};

/// Solves D1 w = x D0 w, D2 w = y D0 w for nonsingular D0. Throws
/// SingularProblem otherwise.
std::vector<EigenSolution> solve_regular(const DeltaTriple& deltas,
                                         const RegularOptions& options = {});

struct StaircaseStep {
  enum class Kind { Column, Row };
  Kind kind = Kind::Column;
  Index rows_before = 0;
  Index cols_before = 0;
  Index rank_d0 = 0;
  /// Dimension of the coupled image [D1 V, D2 V] (or its row analogue).
  Index rank_coupled = 0;
  double gap_d0 = 0.0;
  double gap_coupled = 0.0;
};

struct RegularPart {
  DeltaTriple reduced;
  /// reduced.di = left^* di right, with orthonormal columns.
  Matrix left;
  Matrix right;
  std::vector<StaircaseStep> steps;
  std::vector<std::string> warnings;
};

struct StaircaseOptions {
  /// Relative rank tolerance; default eps * dimension.
  std::optional<double> rank_tol;
  /// Gap below which a rank decision is flagged as ambiguous.
  double ambiguous_gap = 10.0;
};

/// Simultaneous unitary compression of (D0, D1, D2) down to a square block
/// with nonsingular D0. Throws ConvergenceFailure when it does not settle and
/// SingularProblem when it collapses to a non-square block.
RegularPart extract_regular_part(const DeltaTriple& deltas,
                                 const StaircaseOptions& options = {});

struct TwoParOptions {
  std::optional<double> rank_tol;
  double cluster_tol = 1e-8;
};

struct TwoParResult {
  std::vector<EigenSolution> solutions;
  bool singular = false;
  Index delta_size = 0;
  Index regular_size = 0;
  std::vector<StaircaseStep> steps;
  std::vector<std::string> warnings;
};

/// Operator determinants, a rank test on D0, and the regular solve (after
/// staircase reduction when D0 is singular).
TwoParResult solve(const TwoParameterProblem& problem, const TwoParOptions& options = {});

/// Default relative rank tolerance: machine epsilon times the dimension.
double default_rank_tol(Index dimension);

}  // namespace detrep
