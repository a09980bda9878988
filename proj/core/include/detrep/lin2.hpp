#pragma once

#include <string>
#include <vector>

#include "detrep/pencil.hpp"
#include "detrep/polynomial.hpp"
#include "detrep/substitution.hpp"

namespace detrep {

/// a + b x + c y
struct LinearForm {
  Complex a{0.0};
  Complex b{0.0};
  Complex c{0.0};

  static LinearForm x() { return {0.0, 1.0, 0.0}; }
  static LinearForm y() { return {0.0, 0.0, 1.0}; }

  Complex operator()(Complex xv, Complex yv) const noexcept { return a + b * xv + c * yv; }
  BivariatePolynomial polynomial() const { return BivariatePolynomial::linear(a, b, c); }
  bool is_homogeneous() const noexcept { return a == Complex{0.0}; }

  /// The same form written in (x, y), given (x, y) = sub(x~, y~) and this
  /// form expressed in (x~, y~).
  LinearForm back_substituted(const AffineSubstitution& sub) const;
};

/// Rooted tree whose node polynomials q_k are products of the edge forms on
/// the root path; p = sum_k f_k q_k with f_k = coeff[k].
///
/// Trees produced directly by the construction have homogeneous edges;
/// trees that went through a change of variables carry affine edges, which
/// leaves the determinant identity intact.
struct RepresentationTree {
  std::vector<int> parent;         // parent[0] == -1
  std::vector<LinearForm> edge;    // edge[0] unused
  std::vector<LinearForm> coeff;

  static RepresentationTree single(LinearForm f);

  Index size() const noexcept { return static_cast<Index>(parent.size()); }
  int add_node(int parent_index, LinearForm edge_form, LinearForm coeff_form);
  /// Appends `sub` with its root hanging off `at` by `edge_form`.
  void attach(const RepresentationTree& sub, int at, LinearForm edge_form);

  std::vector<BivariatePolynomial> node_polynomials() const;
  /// sum_k f_k q_k
  BivariatePolynomial represented() const;
  RepresentationTree back_substituted(const AffineSubstitution& sub) const;
};

/// Row 1 holds the coefficient forms, row k > 1 has 1 on the diagonal and
/// -(edge form) at (k, parent(k)).
Pencil assemble_pencil(const RepresentationTree& tree);

/// One level of the recursive construction.
struct Lin2Level {
  int degree = 0;
  std::vector<Complex> zetas;
  /// p - sum f_k q_k of this level; of the form y^2 s(x, y).
  BivariatePolynomial remainder;
};

/// A change of variables applied while building; (x, y) = map(x~, y~).
struct SubstitutionRecord {
  std::string kind;   // "rotation", "cubic" or "quartic"
  int level = 0;
  AffineSubstitution map;
};

struct Lin2Result {
  RepresentationTree tree;
  Pencil pencil;
  std::vector<SubstitutionRecord> substitutions;
  std::vector<Lin2Level> levels;
};

/// Plain recursive construction without the n = 3, 4 special cases.
/// Throws DegenerateInput for the zero polynomial.
Lin2Result build_tree(const BivariatePolynomial& p);

/// Node count of build_tree for a generic degree-n polynomial.
int theta(int n);

/// Pencil size of linearize() for a generic degree-n polynomial.
int lin2_size(int n);

struct SpecialCaseResult {
  RepresentationTree tree;   // in the original variables
  Pencil pencil;
  /// (x, y) = substitution(reduced variables); rotation included.
  AffineSubstitution substitution;
  /// Polynomial in the reduced variables before its vanishing coefficients
  /// are set to zero.
  BivariatePolynomial reduced;
  bool fallback = false;
};

/// 3x3 representation of a cubic through x = x~ + s y~ + t. Falls back to
/// build_tree when no simple root s exists.
SpecialCaseResult special_case_cubic(const BivariatePolynomial& p);

/// 5x5 representation of a quartic through two shears. Falls back to
/// build_tree for degenerate substitutions.
SpecialCaseResult special_case_quartic(const BivariatePolynomial& p);

/// Five-node tree for a quartic with vanishing x^3, x^4, y^3, y^4
/// coefficients. Throws DegenerateInput when the x^3 y coefficient is zero.
RepresentationTree reduced_quartic_tree(const BivariatePolynomial& p);

struct Lin2Options {
  bool special_cases = true;
};

/// Full construction: special cases at n = 3, 4 and at the bottom of the
/// recursion for n = 0, 1 (mod 3).
Lin2Result linearize(const BivariatePolynomial& p, const Lin2Options& options = {});

}  // namespace detrep
