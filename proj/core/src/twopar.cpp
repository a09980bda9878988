#include "detrep/twopar.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "detrep/linalg.hpp"

namespace detrep {

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DeltaTriple operator_determinants(const TwoParameterProblem& problem) {
  const Pencil& p1 = problem.first;
  const Pencil& p2 = problem.second;
  DeltaTriple d;
  d.d0 = kronecker(p1.B, p2.C) - kronecker(p1.C, p2.B);
  d.d1 = kronecker(p1.C, p2.A) - kronecker(p1.A, p2.C);
  d.d2 = kronecker(p1.A, p2.B) - kronecker(p1.B, p2.A);
  return d;
}

double default_rank_tol(Index dimension) {
  return std::numeric_limits<double>::epsilon() * static_cast<double>(std::max<Index>(dimension, 1));
}

namespace {

// Single-linkage clusters of xs; labels are numbered by first appearance.
std::vector<int> cluster_labels(const std::vector<Complex>& xs, double tol) {
  const std::size_t n = xs.size();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(xs[i] - xs[j]) <= tol * std::max(1.0, std::abs(xs[i]))) root[find(j)] = find(i);

  std::vector<int> label(n, -1);
  std::vector<int> by_root(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (by_root[r] < 0) by_root[r] = next++;
    label[i] = by_root[r];
  }
  return label;
}

}  // namespace

std::vector<EigenSolution> solve_regular(const DeltaTriple& deltas, const RegularOptions& options) {
  const Index n = deltas.rows();
  if (deltas.cols() != n || deltas.d1.rows() != n || deltas.d1.cols() != n ||
      deltas.d2.rows() != n || deltas.d2.cols() != n)
    throw InvalidInput("solve_regular needs square Delta matrices of equal size");
  if (n == 0) return {};

  const Eigen::VectorXd sv = linalg::singular_values(deltas.d0);
  if (!(sv(n - 1) > options.singular_tol * sv(0)))
    throw SingularProblem("Delta_0 is numerically singular (sigma_min/sigma_max = " +
                          std::to_string(sv(0) > 0 ? sv(n - 1) / sv(0) : 0.0) + ")");

  const auto lu = deltas.d0.partialPivLu();
  const Matrix g1 = lu.solve(deltas.d1);
  const Matrix g2 = lu.solve(deltas.d2);

  linalg::SchurForm schur = linalg::complex_schur(g1);
  std::vector<Complex> xs(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = schur.T(i, i);
  std::vector<int> group = cluster_labels(xs, options.cluster_tol);
  linalg::reorder_schur(schur, group);

  // G2 is block upper triangular in the reordered Schur basis of G1.
  const Matrix s2 = schur.U.adjoint() * g2 * schur.U;

  // Eigenvector of T for eigenvalue x whose components in [start, end) are
  // z: back substitution through the leading block.
  auto eigenvector = [&](Index start, Index end, const Vector& z, Complex x) {
    Vector v = Vector::Zero(n);
    v.segment(start, end - start) = z;
    for (Index i = start - 1; i >= 0; --i) {
      const Index len = end - i - 1;
      const Complex acc = (schur.T.row(i).segment(i + 1, len) * v.segment(i + 1, len)).value();
      Complex d = schur.T(i, i) - x;
      if (std::abs(d) < 1e-14 * std::max(1.0, std::abs(x))) d = 1e-14 * std::max(1.0, std::abs(x));
      v(i) = -acc / d;
    }
    Vector w = schur.U * v;
    return Vector(w / w.norm());
  };

  std::vector<EigenSolution> out;
  out.reserve(static_cast<std::size_t>(n));
  Index start = 0;
  while (start < n) {
    Index end = start + 1;
    while (end < n && group[static_cast<std::size_t>(end)] == group[static_cast<std::size_t>(start)]) ++end;
    const Index m = end - start;
    if (m == 1) {
      const Complex x = schur.T(start, start);
      out.push_back({x, s2(start, start), eigenvector(start, end, Vector::Ones(1), x), 1});
    } else {
      const Matrix sb = s2.block(start, start, m, m);
      const Matrix tb = schur.T.block(start, start, m, m);
      Eigen::ComplexEigenSolver<Matrix> eig(sb, /*computeEigenvectors=*/true);
      for (Index i = 0; i < m; ++i) {
        const Vector z = eig.eigenvectors().col(i);
        const Complex x = z.dot(tb * z) / z.squaredNorm();
        out.push_back({x, eig.eigenvalues()(i), eigenvector(start, end, z, x), static_cast<int>(m)});
      }
    }
    start = end;
  }
  return out;
}

TwoParResult solve(const TwoParameterProblem& problem, const TwoParOptions& options) {
  const DeltaTriple deltas = operator_determinants(problem);
  TwoParResult result;
  result.delta_size = deltas.rows();
  if (result.delta_size == 0) return result;

  const double rank_tol = options.rank_tol.value_or(default_rank_tol(deltas.rows()));
  RegularOptions regular;
  regular.cluster_tol = options.cluster_tol;
  regular.singular_tol = rank_tol;

  const Eigen::VectorXd sv = linalg::singular_values(deltas.d0);
  const bool nonsingular = sv(sv.size() - 1) > rank_tol * sv(0);
  if (nonsingular) {
    result.regular_size = deltas.rows();
    result.solutions = solve_regular(deltas, regular);
    return result;
  }

  result.singular = true;
  StaircaseOptions stair;
  stair.rank_tol = rank_tol;
  RegularPart part = extract_regular_part(deltas, stair);
  result.steps = std::move(part.steps);
  result.warnings = std::move(part.warnings);
  result.regular_size = part.reduced.rows();
  result.solutions = solve_regular(part.reduced, regular);
  return result;
}

}  // namespace detrep
