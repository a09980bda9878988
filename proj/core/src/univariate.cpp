#include "detrep/univariate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace detrep {
namespace {

// Parlett-Reinsch diagonal scaling with radix 2, applied in place.
void balance(Matrix& a) {
  const Index n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

void order_roots(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  auto same = [](double a, double b) {
    return std::abs(a - b) <= 1e-10 * std::max({std::abs(a), std::abs(b), 1e-300});
  };
  std::size_t start = 0;
  while (start < roots.size()) {
    std::size_t end = start + 1;
    while (end < roots.size() && same(std::abs(roots[end]), std::abs(roots[start]))) ++end;
    const double mod = std::abs(roots[start]);
    std::stable_sort(roots.begin() + static_cast<std::ptrdiff_t>(start),
                     roots.begin() + static_cast<std::ptrdiff_t>(end),
                     [mod](Complex a, Complex b) {
                       if (std::abs(a.real() - b.real()) > 1e-10 * std::max(mod, 1e-300))
                         return a.real() < b.real();
                       return a.imag() < b.imag();
                     });
    start = end;
  }
}

}  // namespace

std::vector<Complex> univariate_roots(std::span<const Complex> coeffs) {
  if (coeffs.empty()) throw InvalidInput("univariate polynomial without coefficients");
  const Index n = static_cast<Index>(coeffs.size()) - 1;
  const Complex lead = coeffs.back();
  if (lead == Complex{0.0}) {
    throw DegreeDeflation("leading coefficient of degree-" + std::to_string(n) +
                          " polynomial is zero");
  }
  if (n == 0) return {};
  if (n == 1) return {-coeffs[0] / lead};

  Matrix companion = Matrix::Zero(n, n);
  for (Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Index i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
  balance(companion);

  Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error("companion eigenvalue iteration failed");
  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  order_roots(roots);
  return roots;
}

std::pair<Complex, Complex> univariate_eval(std::span<const Complex> coeffs, Complex t) noexcept {
  Complex value = 0.0;
  Complex deriv = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    deriv = deriv * t + value;
    value = value * t + *it;
  }
  return {value, deriv};
}

}  // namespace detrep
