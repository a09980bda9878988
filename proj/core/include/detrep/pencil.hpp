#pragma once

#include "detrep/polynomial.hpp"
#include "detrep/substitution.hpp"

namespace detrep {

/// Linear matrix pencil A + x B + y C.
///
/// `size` counts block rows; the matrices have dimension size * block_size.
struct Pencil {
  Matrix A;
  Matrix B;
  Matrix C;
  Index block_size = 1;

  Pencil() = default;
  Pencil(Matrix a, Matrix b, Matrix c, Index block = 1);

  Index dimension() const noexcept { return A.rows(); }
  Index size() const noexcept { return block_size ? A.rows() / block_size : 0; }

  Matrix at(Complex x, Complex y) const { return A + x * B + y * C; }
  Complex det(Complex x, Complex y) const;

  /// Pencil in (x, y) from one written in (x~, y~), where
  /// (x, y) = sub(x~, y~).
  Pencil back_substituted(const AffineSubstitution& sub) const;
};

/// |det(A + xB + yC) - p(x, y)| divided by sum|a_jk|, the bound of |p| on the
/// unit bidisk.
double det_identity_error(const Pencil& pencil, const BivariatePolynomial& p,
                          Complex x, Complex y);

/// Matrix version: the reference scale is (sum ||P_jk||_2)^k.
double det_identity_error(const Pencil& pencil,
                          const MatrixBivariatePolynomial& p, Complex x,
                          Complex y);

}  // namespace detrep
