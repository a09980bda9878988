#include "detrep/substitution.hpp"

#include <cmath>

namespace detrep {

AffineSubstitution AffineSubstitution::shear_x(Complex s, Complex t) {
  AffineSubstitution sub;
  sub.linear << 1.0, s, 0.0, 1.0;
  sub.shift << t, 0.0;
  return sub;
}

AffineSubstitution AffineSubstitution::shear_y(Complex u, Complex v) {
  AffineSubstitution sub;
  sub.linear << 1.0, 0.0, u, 1.0;
  sub.shift << 0.0, v;
  return sub;
}

void AffineSubstitution::validate() const {
  const double scale = linear.cwiseAbs().maxCoeff();
  if (!linear.allFinite() || !shift.allFinite() ||
      std::abs(linear.determinant()) <= 1e-14 * scale * scale) {
    throw InvalidInput("affine substitution is not invertible");
  }
}

AffineSubstitution AffineSubstitution::inverse() const {
  validate();
  AffineSubstitution inv;
  inv.linear = linear.inverse();
  inv.shift = -inv.linear * shift;
  return inv;
}

AffineSubstitution AffineSubstitution::compose(const AffineSubstitution& inner) const {
  AffineSubstitution out;
  out.linear = linear * inner.linear;
  out.shift = linear * inner.shift + shift;
  return out;
}

std::pair<Complex, Complex> AffineSubstitution::map(Complex xt, Complex yt) const {
  const Eigen::Vector2cd v = linear * Eigen::Vector2cd(xt, yt) + shift;
  return {v(0), v(1)};
}

BivariatePolynomial apply_substitution(const BivariatePolynomial& p,
                                       const AffineSubstitution& s) {
  s.validate();
  const auto X = BivariatePolynomial::linear(s.shift(0), s.linear(0, 0), s.linear(0, 1));
  const auto Y = BivariatePolynomial::linear(s.shift(1), s.linear(1, 0), s.linear(1, 1));
  const int n = p.degree();
  // Nested Horner: p = sum_j X^j (sum_k a_jk Y^k).
  BivariatePolynomial acc;
  for (int j = n; j >= 0; --j) {
    BivariatePolynomial inner;
    for (int k = n - j; k >= 0; --k)
      inner = inner * Y + BivariatePolynomial::constant(p.coeff(j, k));
    acc = acc * X + inner;
  }
  return acc;
}

}  // namespace detrep
