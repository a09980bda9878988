#pragma once

#include <span>
#include <vector>

#include "detrep/types.hpp"

namespace detrep {

/// All roots of c[0] + c[1] t + ... + c[n] t^n.
///
/// Roots are the eigenvalues of the balanced companion matrix of the monic
/// normalization, ordered by ascending modulus; equal moduli are ordered by
/// ascending real part, then ascending imaginary part. Throws
/// DegreeDeflation when c[n] == 0 and InvalidInput for an empty list.
std::vector<Complex> univariate_roots(std::span<const Complex> coeffs);

/// Value and first derivative of the univariate polynomial at t.
std::pair<Complex, Complex> univariate_eval(std::span<const Complex> coeffs,
                                            Complex t) noexcept;

}  // namespace detrep
