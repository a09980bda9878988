#include "detrep/linalg.hpp"

#include <cmath>
#include <limits>

#include <algorithm>
#include <vector>

#include <Eigen/Eigenvalues>

#include <lapacke.h>

namespace detrep::linalg {
namespace {

// jobz = 'A' for full U and V, 'N' for singular values only. a is
// overwritten.
lapack_int gesdd(char jobz, Matrix& a, Eigen::VectorXd& s, Matrix& u, Matrix& vt) {
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  s.resize(std::min(m, n));
  if (jobz == 'A') {
    u.resize(m, m);
    vt.resize(n, n);
  } else {
    u.resize(1, 1);
    vt.resize(1, 1);
  }
  auto* pa = reinterpret_cast<lapack_complex_double*>(a.data());
  auto* pu = reinterpret_cast<lapack_complex_double*>(u.data());
  auto* pv = reinterpret_cast<lapack_complex_double*>(vt.data());
  const lapack_int ldu = static_cast<lapack_int>(u.rows());
  const lapack_int ldv = static_cast<lapack_int>(vt.rows());
  return LAPACKE_zgesdd(LAPACK_COL_MAJOR, jobz, m, n, pa, std::max<lapack_int>(1, m), s.data(), pu,
                        ldu, pv, ldv);
}

lapack_int gesvd(char job, Matrix& a, Eigen::VectorXd& s, Matrix& u, Matrix& vt) {
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  s.resize(std::min(m, n));
  if (job == 'A') {
    u.resize(m, m);
    vt.resize(n, n);
  } else {
    u.resize(1, 1);
    vt.resize(1, 1);
  }
  std::vector<double> superb(static_cast<std::size_t>(std::max<lapack_int>(1, std::min(m, n))));
  auto* pa = reinterpret_cast<lapack_complex_double*>(a.data());
  auto* pu = reinterpret_cast<lapack_complex_double*>(u.data());
  auto* pv = reinterpret_cast<lapack_complex_double*>(vt.data());
  return LAPACKE_zgesvd(LAPACK_COL_MAJOR, job, job, m, n, pa, std::max<lapack_int>(1, m), s.data(),
                        pu, static_cast<lapack_int>(u.rows()), pv, static_cast<lapack_int>(vt.rows()),
                        superb.data());
}

Svd compute(const Matrix& a, bool vectors) {
  Svd out;
  if (a.size() == 0) {
    out.U = Matrix::Identity(a.rows(), a.rows());
    out.V = Matrix::Identity(a.cols(), a.cols());
    out.s = Eigen::VectorXd(0);
    return out;
  }
  const char job = vectors ? 'A' : 'N';
  Matrix work = a;
  Matrix vt;
  if (gesdd(job, work, out.s, out.U, vt) != 0) {
    work = a;
    if (gesvd(job, work, out.s, out.U, vt) != 0) throw Error("singular value decomposition failed");
  }
  if (vectors) out.V = vt.adjoint();
  return out;
}

}  // namespace

Svd svd(const Matrix& a) { return compute(a, true); }

Eigen::VectorXd singular_values(const Matrix& a) { return compute(a, false).s; }

SchurForm complex_schur(const Matrix& a) {
  if (a.rows() == 0) return {Matrix(0, 0), Matrix(0, 0)};
  Eigen::ComplexSchur<Matrix> schur(a, /*computeU=*/true);
  if (schur.info() != Eigen::Success) throw Error("complex Schur iteration did not converge");
  return {schur.matrixT(), schur.matrixU()};
}

void swap_adjacent(SchurForm& schur, Index k) {
  Matrix& T = schur.T;
  Matrix& U = schur.U;
  const Index n = T.rows();
  const Complex t11 = T(k, k);
  const Complex t22 = T(k + 1, k + 1);

  // Rotation [c s; -conj(s) c] mapping (T(k,k+1), t22 - t11) to (r, 0).
  const Complex f = T(k, k + 1);
  const Complex g = t22 - t11;
  const double r = std::hypot(std::abs(f), std::abs(g));
  if (r == 0.0) return;
  double c;
  Complex s;
  if (std::abs(f) == 0.0) {
    c = 0.0;
    s = std::conj(g) / std::abs(g);
  } else {
    c = std::abs(f) / r;
    s = (f / std::abs(f)) * std::conj(g) / r;
  }

  for (Index j = k + 2; j < n; ++j) {
    const Complex a = T(k, j);
    const Complex b = T(k + 1, j);
    T(k, j) = c * a + s * b;
    T(k + 1, j) = c * b - std::conj(s) * a;
  }
  const Complex sc = std::conj(s);
  for (Index i = 0; i < k; ++i) {
    const Complex a = T(i, k);
    const Complex b = T(i, k + 1);
    T(i, k) = c * a + sc * b;
    T(i, k + 1) = c * b - s * a;
  }
  T(k, k) = t22;
  T(k + 1, k + 1) = t11;
  for (Index i = 0; i < n; ++i) {
    const Complex a = U(i, k);
    const Complex b = U(i, k + 1);
    U(i, k) = c * a + sc * b;
    U(i, k + 1) = c * b - s * a;
  }
}

void reorder_schur(SchurForm& schur, std::vector<int>& group) {
  const Index n = schur.T.rows();
  for (Index i = 1; i < n; ++i) {
    for (Index k = i; k > 0 && group[static_cast<std::size_t>(k - 1)] > group[static_cast<std::size_t>(k)]; --k) {
      swap_adjacent(schur, k - 1);
      std::swap(group[static_cast<std::size_t>(k - 1)], group[static_cast<std::size_t>(k)]);
    }
  }
}

RangeSplit column_space(const Matrix& a, double threshold) {
  RangeSplit out;
  const Index m = a.rows();
  if (a.cols() == 0 || m == 0) {
    out.complement = Matrix::Identity(m, m);
    out.range = Matrix(m, 0);
    out.singular_values = Eigen::VectorXd(0);
    return out;
  }
  const Svd d = svd(a);
  out.singular_values = d.s;
  Index r = 0;
  while (r < out.singular_values.size() && out.singular_values(r) > threshold) ++r;
  out.rank = r;
  out.range = d.U.leftCols(r);
  out.complement = d.U.rightCols(m - r);
  return out;
}

TwoSidedSplit two_sided_split(const Matrix& a, double threshold) {
  TwoSidedSplit out;
  const Index m = a.rows();
  const Index p = a.cols();
  if (m == 0 || p == 0) {
    out.left_range = Matrix(m, 0);
    out.left_null = Matrix::Identity(m, m);
    out.right_range = Matrix(p, 0);
    out.right_null = Matrix::Identity(p, p);
    out.singular_values = Eigen::VectorXd(0);
    return out;
  }
  const Svd d = svd(a);
  out.singular_values = d.s;
  Index r = 0;
  while (r < out.singular_values.size() && out.singular_values(r) > threshold) ++r;
  out.rank = r;
  out.left_range = d.U.leftCols(r);
  out.left_null = d.U.rightCols(m - r);
  out.right_range = d.V.leftCols(r);
  out.right_null = d.V.rightCols(p - r);
  return out;
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

double rank_gap(const Eigen::VectorXd& sv, Index rank) {
  if (rank <= 0 || rank >= sv.size()) return std::numeric_limits<double>::infinity();
  const double dropped = sv(rank);
  if (dropped == 0.0) return std::numeric_limits<double>::infinity();
  return sv(rank - 1) / dropped;
}

}  // namespace detrep::linalg
