#include "detrep/pencil.hpp"

#include <cmath>

namespace detrep {

Pencil::Pencil(Matrix a, Matrix b, Matrix c, Index block)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), block_size(block) {
  if (A.rows() != A.cols() || B.rows() != A.rows() || B.cols() != A.cols() ||
      C.rows() != A.rows() || C.cols() != A.cols()) {
    throw InvalidInput("pencil matrices must be square and of equal dimension");
  }
  if (block_size < 1 || A.rows() % block_size != 0)
    throw InvalidInput("pencil dimension is not a multiple of the block size");
}

Complex Pencil::det(Complex x, Complex y) const {
  if (dimension() == 0) return 1.0;
  return at(x, y).partialPivLu().determinant();
}

Pencil Pencil::back_substituted(const AffineSubstitution& sub) const {
  // x~ = G (x, y) + g with G = E^{-1}, g = -E^{-1} t.
  const AffineSubstitution inv = sub.inverse();
  const auto& G = inv.linear;
  const auto& g = inv.shift;
  return Pencil(A + g(0) * B + g(1) * C, G(0, 0) * B + G(1, 0) * C,
                G(0, 1) * B + G(1, 1) * C, block_size);
}

double det_identity_error(const Pencil& pencil, const BivariatePolynomial& p, Complex x,
                          Complex y) {
  const double scale = std::max(p.abs_coeff_sum(), 1e-300);
  return std::abs(pencil.det(x, y) - evaluate(p, x, y)) / scale;
}

double det_identity_error(const Pencil& pencil, const MatrixBivariatePolynomial& p, Complex x,
                          Complex y) {
  const Matrix value = evaluate_matrix(p, x, y);
  const Complex target = value.partialPivLu().determinant();
  const double scale =
      std::max(std::pow(p.norm_sum(), static_cast<double>(p.block_size())), 1e-300);
  return std::abs(pencil.det(x, y) - target) / scale;
}

}  // namespace detrep
