#pragma once

#include <vector>

#include "detrep/types.hpp"

// Dense kernels used by the two-parameter solver.

namespace detrep::linalg {

/// A = U T U^* with T upper triangular and U unitary.
struct SchurForm {
  Matrix T;
  Matrix U;
};

SchurForm complex_schur(const Matrix& a);

/// Exchanges T(k,k) and T(k+1,k+1) by a unitary rotation, updating U.
void swap_adjacent(SchurForm& schur, Index k);

/// Reorders the diagonal so that `group` becomes non-decreasing (stable),
/// where group[i] labels T(i,i). `group` is permuted alongside.
void reorder_schur(SchurForm& schur, std::vector<int>& group);

/// Full SVD a = U diag(s) V^* (LAPACK divide and conquer).
struct Svd {
  Matrix U;
  Eigen::VectorXd s;
  Matrix V;
};

Svd svd(const Matrix& a);
Eigen::VectorXd singular_values(const Matrix& a);

/// Orthonormal bases of the numerical column space and its complement.
struct RangeSplit {
  Index rank = 0;
  Matrix range;        // m x rank
  Matrix complement;   // m x (m - rank)
  Eigen::VectorXd singular_values;
};

/// Singular values above `threshold` define the range.
RangeSplit column_space(const Matrix& a, double threshold);

/// SVD-based split of both sides of a (m x p):
/// left = [U1 U2], right = [V1 V2] with U1, V1 spanning rank directions.
struct TwoSidedSplit {
  Index rank = 0;
  Matrix left_range, left_null;
  Matrix right_range, right_null;
  Eigen::VectorXd singular_values;
};

TwoSidedSplit two_sided_split(const Matrix& a, double threshold);

double spectral_norm(const Matrix& a);

/// Smallest ratio sigma_kept / sigma_dropped across the rank cut; +inf when
/// nothing is dropped or nothing is kept.
double rank_gap(const Eigen::VectorXd& sv, Index rank);

}  // namespace detrep::linalg
