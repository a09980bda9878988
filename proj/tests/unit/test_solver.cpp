#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace detrep;

namespace {

using Point = std::pair<Complex, Complex>;

std::vector<Point> points(const std::vector<RootRecord>& roots) {
  std::vector<Point> out;
  for (const auto& r : roots)
    for (int m = 0; m < r.multiplicity; ++m) out.emplace_back(r.x, r.y);
  return out;
}

BivariatePolynomial cubic_p() { return BivariatePolynomial({{1, 3, 6, 10}, {2, 5, 9}, {4, 8}, {7}}); }
BivariatePolynomial cubic_q() { return BivariatePolynomial({{-1, 0, 0, 1}, {0, 0, 0}, {0, 0}, {1}}); }

}  // namespace

TEST(Solver, LinearSystem) {
  const auto p = BivariatePolynomial::linear(-1, 1, 1);
  const auto q = BivariatePolynomial::linear(0, 1, -1);
  for (auto method : {Linearization::Lin1, Linearization::Lin2}) {
    SolveOptions o;
    o.linearization = method;
    const auto roots = solve_system(p, q, o);
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_NEAR(std::abs(roots[0].x - 0.5), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(roots[0].y - 0.5), 0.0, 1e-14);
  }
}

TEST(Solver, CubicPairMatchesResultant) {
  const auto p = cubic_p();
  const auto q = cubic_q();
  const auto ref = oracle::resultant_roots(p, q);
  ASSERT_EQ(ref.size(), 9u);
  for (auto method : {Linearization::Lin1, Linearization::Lin2}) {
    SolveOptions o;
    o.linearization = method;
    const SolveReport r = solve_system_report(p, q, o);
    EXPECT_EQ(r.roots.size(), 9u);
    EXPECT_LT(oracle::match_distance(points(r.roots), ref), 1e-7);
    for (const auto& root : r.roots) EXPECT_LE(root.accuracy, 1e-8);
    if (method == Linearization::Lin1) {
      EXPECT_EQ(r.delta_size, 25);
      EXPECT_TRUE(r.singular);
      EXPECT_EQ(r.regular_size, 9);
    } else {
      EXPECT_EQ(r.delta_size, 9);
    }
  }
}

TEST(Solver, RealSystemsHaveConjugateClosedRoots) {
  std::mt19937_64 rng(401);
  const auto p = oracle::random_polynomial(rng, 4, false);
  const auto q = oracle::random_polynomial(rng, 4, false);
  const auto roots = points(solve_system(p, q));
  ASSERT_EQ(roots.size(), 16u);
  std::vector<Point> conj;
  for (const auto& [x, y] : roots) conj.emplace_back(std::conj(x), std::conj(y));
  EXPECT_LT(oracle::match_distance(roots, conj), 1e-8);
}

TEST(Solver, Lin1AndLin2Agree) {
  std::mt19937_64 rng(402);
  for (int n = 2; n <= 5; ++n) {
    const auto p = oracle::random_polynomial(rng, n, true);
    const auto q = oracle::random_polynomial(rng, n, true);
    SolveOptions a, b;
    a.linearization = Linearization::Lin1;
    b.linearization = Linearization::Lin2;
    const auto ra = points(solve_system(p, q, a));
    const auto rb = points(solve_system(p, q, b));
    ASSERT_EQ(static_cast<int>(ra.size()), n * n);
    EXPECT_LT(oracle::match_distance(ra, rb), 1e-7) << "n = " << n;
    EXPECT_LT(oracle::match_distance(ra, oracle::resultant_roots(p, q)), 1e-7) << "n = " << n;
  }
}

TEST(Solver, SwapVariables) {
  const auto p = cubic_p();
  const auto q = cubic_q();
  SolveOptions o;
  o.swap_variables = true;
  const SolveReport r = solve_system_report(p, q, o);
  EXPECT_TRUE(r.swapped);
  EXPECT_LT(oracle::match_distance(points(r.roots), oracle::resultant_roots(p, q)), 1e-7);
}

TEST(Solver, NewtonFixedPoint) {
  const auto p = BivariatePolynomial::linear(-1, 1, 1);
  const auto q = BivariatePolynomial::linear(0, 1, -1);
  const auto r = newton_refine(p, q, 0.5, 0.5, 3);
  EXPECT_EQ(r.x, Complex(0.5));
  EXPECT_EQ(r.y, Complex(0.5));
  EXPECT_TRUE(r.refined);
  EXPECT_EQ(r.iterations, 0);
}

TEST(Solver, NewtonConvergesQuadratically) {
  // x^2 - y, y - 1
  const BivariatePolynomial p({{0, -1, 0}, {0, 0}, {1}});
  const auto q = BivariatePolynomial::linear(-1, 0, 1);
  double last = 1.0;
  for (int steps = 1; steps <= 3; ++steps) {
    const auto r = newton_refine(p, q, 1.05, 1.02, steps);
    const double err = std::abs(r.x - 1.0) + std::abs(r.y - 1.0);
    EXPECT_LT(err, 1.0 * last * last + 1e-15) << steps;
    last = err;
  }
  EXPECT_LT(last, 1e-11);
}

TEST(Solver, NewtonStopsOnSingularJacobian) {
  // xy - 1, x - y at the origin: the first Jacobian row vanishes.
  const BivariatePolynomial p({{-1, 0, 0}, {0, 1}, {0}});
  ASSERT_EQ(p.coeff(1, 1), Complex(1.0));
  const auto q = BivariatePolynomial::linear(0, 1, -1);
  const auto r = newton_refine(p, q, 0.0, 0.0, 2);
  EXPECT_FALSE(r.refined);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_TRUE(std::isinf(inverse_jacobian_norm(p, q, 0.0, 0.0)));
  EXPECT_THROW(newton_refine(p, q, 0.0, 0.0, -1), InvalidInput);

  // x^2, y^2: the origin is an exact but double root.
  const auto x2 = BivariatePolynomial::monomial(2, 0);
  const auto y2 = BivariatePolynomial::monomial(0, 2);
  const auto d = newton_refine(x2, y2, 0.0, 0.0, 2);
  EXPECT_FALSE(d.refined);
  EXPECT_EQ(d.x, Complex(0.0));
}

TEST(Solver, AccuracyMeasureMatchesOracle) {
  std::mt19937_64 rng(403);
  for (int i = 0; i < 10; ++i) {
    const auto p = oracle::random_polynomial(rng, 3, true);
    const auto q = oracle::random_polynomial(rng, 3, true);
    const Complex x = oracle::disk_point(rng);
    const Complex y = oracle::disk_point(rng);
    const auto [px, py] = oracle::gradient(p, x, y);
    const auto [qx, qy] = oracle::gradient(q, x, y);
    Eigen::Matrix2cd j;
    j << Complex(px), Complex(py), Complex(qx), Complex(qy);
    const auto [big, small] = oracle::singular_values_2x2(j);
    (void)big;
    const double res = static_cast<double>(std::max(std::abs(oracle::eval(p, x, y)), std::abs(oracle::eval(q, x, y))));
    const double expected = res / small;
    EXPECT_NEAR(accuracy_measure(p, q, x, y), expected, 1e-10 * expected);
    EXPECT_NEAR(inverse_jacobian_norm(p, q, x, y), 1.0 / small, 1e-10 / small);
  }
}

TEST(Solver, FiniteDifferenceJacobianCheck) {
  std::mt19937_64 rng(404);
  const auto p = oracle::random_polynomial(rng, 4, true);
  const Complex x{0.3, -0.2};
  const Complex y{-0.1, 0.4};
  const auto [dx, dy] = partial_derivatives(p);
  const auto [fx, fy] = oracle::finite_difference(p, x, y);
  EXPECT_NEAR(std::abs(evaluate(dx, x, y) - fx), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(evaluate(dy, x, y) - fy), 0.0, 1e-7);
}

TEST(Solver, CommonFactorIsDegenerate) {
  const auto f = BivariatePolynomial::linear(-1, 1, 1);
  const auto p = f * BivariatePolynomial::linear(0, 1, -1);
  const auto q = f * BivariatePolynomial::linear(3, 1, 2);
  EXPECT_THROW(solve_system(p, q), DegenerateSystem);
  EXPECT_NO_THROW(check_zero_dimensional(cubic_p(), cubic_q()));
}

TEST(Solver, InvalidInputs) {
  const auto p = cubic_p();
  EXPECT_THROW(solve_system(p, BivariatePolynomial::constant(2.0)), InvalidInput);
  EXPECT_THROW(solve_system(BivariatePolynomial(), p), InvalidInput);
  SolveOptions o;
  o.newton_steps = -1;
  EXPECT_THROW(solve_system(p, cubic_q(), o), InvalidInput);
}

TEST(Solver, BackwardErrorIsRelative) {
  const auto p = cubic_p();
  const auto q = cubic_q();
  EXPECT_NEAR(backward_error(p * 1e6, q, 0.3, 0.2), backward_error(p, q, 0.3, 0.2), 1e-15);
  EXPECT_LE(backward_error(p, q, 0.3, 0.2), 1.0);
}

TEST(Solver, NewtonContraction) {
  std::mt19937_64 rng(405);
  const auto p = oracle::random_polynomial(rng, 3, true);
  const auto q = oracle::random_polynomial(rng, 3, true);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto residual = [&](Complex x, Complex y) { return std::max(std::abs(p(x, y)), std::abs(q(x, y))); };
  int tried = 0;
  for (const auto& root : solve_system(p, q)) {
    const Complex x0 = root.x + 1e-4 * Complex(u(rng), u(rng));
    const Complex y0 = root.y + 1e-4 * Complex(u(rng), u(rng));
    if (accuracy_measure(p, q, x0, y0) > 1e-2) continue;
    ++tried;
    const auto r = newton_refine(p, q, x0, y0, 1);
    EXPECT_LE(residual(r.x, r.y), 0.1 * residual(x0, y0));
  }
  EXPECT_GT(tried, 0);
}
