#pragma once

#include <utility>

#include "detrep/polynomial.hpp"

namespace detrep {

/// Affine change of variables (x, y) = E (x~, y~) + t.
struct AffineSubstitution {
  Eigen::Matrix2cd linear = Eigen::Matrix2cd::Identity();
  Eigen::Vector2cd shift = Eigen::Vector2cd::Zero();

  static AffineSubstitution identity() { return {}; }
  /// x = x~ + s y~ + t, y = y~
  static AffineSubstitution shear_x(Complex s, Complex t);
  /// x = x~, y = u x~ + y~ + v
  static AffineSubstitution shear_y(Complex u, Complex v);

  /// Throws InvalidInput when E is singular.
  void validate() const;
  /// (x~, y~) as a function of (x, y).
  AffineSubstitution inverse() const;
  /// Composite map for (x~, y~) = inner(x^, y^); returns (x^, y^) -> (x, y).
  AffineSubstitution compose(const AffineSubstitution& inner) const;
  /// Image of (x~, y~).
  std::pair<Complex, Complex> map(Complex xt, Complex yt) const;
};

/// p~(x~, y~) = p(E (x~, y~) + t), expanded into coefficients.
BivariatePolynomial apply_substitution(const BivariatePolynomial& p,
                                       const AffineSubstitution& s);

}  // namespace detrep
