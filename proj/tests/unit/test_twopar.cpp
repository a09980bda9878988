#include <gtest/gtest.h>

#include "detrep/linalg.hpp"
#include "oracles.hpp"

using namespace detrep;

namespace {

Matrix random_matrix(std::mt19937_64& rng, Index r, Index c) {
  std::normal_distribution<double> g;
  Matrix m(r, c);
  for (auto& v : m.reshaped()) v = Complex(g(rng), g(rng));
  return m;
}

Pencil random_pencil(std::mt19937_64& rng, Index n) {
  return Pencil(random_matrix(rng, n, n), random_matrix(rng, n, n), random_matrix(rng, n, n));
}

double sigma_min_ratio(const Matrix& m) {
  const Eigen::VectorXd s = linalg::singular_values(m);
  return s(s.size() - 1) / s(0);
}

BivariatePolynomial cubic_p() {
  return BivariatePolynomial({{1, 3, 6, 10}, {2, 5, 9}, {4, 8}, {7}});
}

BivariatePolynomial cubic_q() {
  // x^3 + y^3 - 1
  return BivariatePolynomial({{-1, 0, 0, 1}, {0, 0, 0}, {0, 0}, {1}});
}

}  // namespace

TEST(TwoPar, KroneckerMatchesOracle) {
  std::mt19937_64 rng(301);
  const Matrix a = random_matrix(rng, 3, 2);
  const Matrix b = random_matrix(rng, 2, 4);
  const Matrix k = kronecker(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 8);
  EXPECT_EQ((k - oracle::kronecker(a, b)).norm(), 0.0);
}

TEST(TwoPar, OperatorDeterminantFormulas) {
  std::mt19937_64 rng(302);
  const TwoParameterProblem prob{random_pencil(rng, 3), random_pencil(rng, 2)};
  const Matrix &A1 = prob.first.A, &B1 = prob.first.B, &C1 = prob.first.C;
  const Matrix &A2 = prob.second.A, &B2 = prob.second.B, &C2 = prob.second.C;
  using oracle::kronecker;
  const DeltaTriple d = operator_determinants(prob);
  EXPECT_LT((d.d0 - (kronecker(B1, C2) - kronecker(C1, B2))).norm(), 1e-13);
  EXPECT_LT((d.d1 - (kronecker(C1, A2) - kronecker(A1, C2))).norm(), 1e-13);
  EXPECT_LT((d.d2 - (kronecker(A1, B2) - kronecker(B1, A2))).norm(), 1e-13);
}

TEST(TwoPar, DecoupledProblem) {
  // (x - 2) u1 = 0, (y + 1 - i) u2 = 0.
  Pencil first(Matrix::Constant(1, 1, -2.0), Matrix::Constant(1, 1, 1.0), Matrix::Zero(1, 1));
  Pencil second(Matrix::Constant(1, 1, Complex(1, -1)), Matrix::Zero(1, 1), Matrix::Constant(1, 1, 1.0));
  const auto sol = solve_regular(operator_determinants({first, second}));
  ASSERT_EQ(sol.size(), 1u);
  EXPECT_NEAR(std::abs(sol[0].x - 2.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(sol[0].y - Complex(-1, 1)), 0.0, 1e-14);
}

TEST(TwoPar, RandomRegularProblem) {
  std::mt19937_64 rng(303);
  const TwoParameterProblem prob{random_pencil(rng, 3), random_pencil(rng, 4)};
  const auto sol = solve_regular(operator_determinants(prob));
  ASSERT_EQ(sol.size(), 12u);
  for (const auto& s : sol) {
    EXPECT_LT(sigma_min_ratio(prob.first.at(s.x, s.y)), 1e-10);
    EXPECT_LT(sigma_min_ratio(prob.second.at(s.x, s.y)), 1e-10);
    EXPECT_NEAR(s.w.norm(), 1.0, 1e-12);
  }
  const TwoParResult r = solve(prob);
  EXPECT_FALSE(r.singular);
  EXPECT_EQ(r.delta_size, 12);
  EXPECT_EQ(r.solutions.size(), 12u);
}

TEST(TwoPar, SingularDeltaIsRejected) {
  DeltaTriple d{Matrix::Zero(2, 2), Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  EXPECT_THROW(solve_regular(d), SingularProblem);
  DeltaTriple bad{Matrix::Identity(2, 3), Matrix::Identity(2, 3), Matrix::Identity(2, 3)};
  EXPECT_THROW(solve_regular(bad), InvalidInput);
}

TEST(TwoPar, StaircaseOnLin1CubicPair) {
  const auto p = cubic_p();
  const auto q = cubic_q();
  const TwoParameterProblem prob = linearize_system(p, q, Linearization::Lin1);
  const DeltaTriple d = operator_determinants(prob);
  ASSERT_EQ(d.rows(), 25);
  EXPECT_LT(sigma_min_ratio(d.d0), 1e-12);

  StaircaseOptions opts;
  opts.rank_tol = 1e-8;
  const RegularPart part = extract_regular_part(d, opts);
  ASSERT_EQ(part.reduced.rows(), 9);
  ASSERT_EQ(part.reduced.cols(), 9);
  EXPECT_GT(sigma_min_ratio(part.reduced.d0), 1e-8);
  EXPECT_FALSE(part.steps.empty());
  EXPECT_LT((part.left.adjoint() * part.left - Matrix::Identity(9, 9)).norm(), 1e-12);
  EXPECT_LT((part.left.adjoint() * d.d1 * part.right - part.reduced.d1).norm(), 1e-10 * d.d1.norm());

  const auto sol = solve_regular(part.reduced);
  std::vector<std::pair<Complex, Complex>> mine;
  for (const auto& s : sol) {
    const auto r = newton_refine(p, q, s.x, s.y, 2);
    mine.emplace_back(r.x, r.y);
  }
  EXPECT_LT(oracle::match_distance(mine, oracle::resultant_roots(p, q)), 1e-7);
}

TEST(TwoPar, ClusteredEigenvalues) {
  // Both first-pencil eigenvalues share x = 1 with distinct y.
  Matrix B = Matrix::Identity(2, 2);
  Matrix A = -Matrix::Identity(2, 2);
  Matrix C = Matrix::Zero(2, 2);
  Pencil first(A, B, C);
  std::mt19937_64 rng(304);
  Pencil second = random_pencil(rng, 2);
  const auto sol = solve_regular(operator_determinants({first, second}));
  ASSERT_EQ(sol.size(), 4u);
  for (const auto& s : sol) {
    EXPECT_NEAR(std::abs(s.x - 1.0), 0.0, 1e-10);
    EXPECT_LT(sigma_min_ratio(second.at(s.x, s.y)), 1e-10);
  }
}

TEST(TwoPar, DefaultRankTol) {
  EXPECT_DOUBLE_EQ(default_rank_tol(10), 10 * std::numeric_limits<double>::epsilon());
  EXPECT_DOUBLE_EQ(default_rank_tol(0), std::numeric_limits<double>::epsilon());
}
