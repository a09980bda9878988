#pragma once

#include <optional>
#include <vector>

#include "detrep/lin2.hpp"

namespace detrep::detail {

/// Coefficients below this fraction of ||p|| count as zero in remainders.
inline constexpr double kRemainderTol = 1e-11;
/// Leading x^n coefficient below this fraction of the top form triggers a
/// rotation y = y~ + gamma x.
inline constexpr double kLeadingTol = 1e-6;

struct Context {
  bool special_cases = true;
  std::vector<SubstitutionRecord>* substitutions = nullptr;
  std::vector<Lin2Level>* levels = nullptr;
  int level = 0;
};

struct MainBranch {
  RepresentationTree tree;
  BivariatePolynomial remainder;
  /// remainder / y^2
  BivariatePolynomial quotient;
};

/// Main branch q_{k+1} = (x - zeta_k y) q_k with coefficients f_1..f_n.
MainBranch main_branch(const BivariatePolynomial& p, const std::vector<Complex>& zetas);

/// Tree for p in the current context (recursive).
RepresentationTree represent(const BivariatePolynomial& p, const Context& ctx);

/// gamma for which the rotated polynomial has a well-sized x^n coefficient,
/// or nullopt when no rotation is needed.
std::optional<Complex> rotation_for(const BivariatePolynomial& p);

/// Special-case trees; nullopt on degenerate input.
std::optional<SpecialCaseResult> try_cubic(const BivariatePolynomial& p);
std::optional<SpecialCaseResult> try_quartic(const BivariatePolynomial& p);

}  // namespace detrep::detail
