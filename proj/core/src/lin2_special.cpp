// Reduced-size constructions for cubics (3 nodes) and quartics (5 nodes).

#include <cmath>
#include <functional>

#include "detrep/lin2.hpp"
#include "detrep/univariate.hpp"
#include "lin2_internal.hpp"

namespace detrep {
namespace detail {
namespace {

// Simple roots of c[0] + c[1] t + ..., real ones (snapped to the real
// axis) flagged so real input can keep a real change of variables.
struct RootChoice {
  Complex value;
  bool real;
};

std::vector<RootChoice> simple_roots(std::vector<Complex> c) {
  double scale = 0.0;
  for (const Complex& v : c) scale += std::abs(v);
  while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * scale) c.pop_back();
  if (c.size() < 2) return {};
  const int deg = static_cast<int>(c.size()) - 1;

  std::vector<RootChoice> out;
  for (Complex r : univariate_roots(c)) {
    const double d = std::abs(univariate_eval(c, r).second);
    const double m = std::max(1.0, std::abs(r));
    if (d <= 1e-8 * scale * std::pow(m, deg - 1)) continue;
    const bool real = std::abs(r.imag()) <= 1e-10 * m;
    out.push_back({real ? Complex(r.real(), 0.0) : r, real});
  }
  return out;
}

double pencil_scale(const Pencil& p) { return p.A.norm() + p.B.norm() + p.C.norm(); }

// Keeps the candidate with the smaller pencil. For real input a real
// candidate wins unless it is more than kRealSlack times larger.
constexpr double kRealSlack = 100.0;

void keep_better(std::optional<SpecialCaseResult>& best, bool& best_real,
                 std::optional<SpecialCaseResult> cand, bool cand_real, bool want_real) {
  if (!cand) return;
  if (best) {
    double cs = pencil_scale(cand->pencil);
    double bs = pencil_scale(best->pencil);
    if (want_real && cand_real && !best_real) cs /= kRealSlack;
    if (want_real && best_real && !cand_real) bs /= kRealSlack;
    if (cs >= bs) return;
  }
  best = std::move(cand);
  best_real = cand_real;
}

// Parameter that zeroes coefficient (j, k) of apply_substitution(p, make(param)).
// That coefficient is affine in the parameter for the shears used here.
std::optional<Complex> vanishing_parameter(const BivariatePolynomial& p,
                                           const std::function<AffineSubstitution(Complex)>& make,
                                           int j, int k) {
  const Complex c0 = apply_substitution(p, make(0.0)).coeff(j, k);
  const Complex c1 = apply_substitution(p, make(1.0)).coeff(j, k);
  const Complex slope = c1 - c0;
  if (std::abs(slope) <= 1e-12 * std::max(p.max_abs_coeff(), 1e-300)) return std::nullopt;
  return -c0 / slope;
}

BivariatePolynomial with_zeros(const BivariatePolynomial& p,
                               std::initializer_list<std::pair<int, int>> where) {
  auto t = p.table();
  for (auto [j, k] : where)
    if (j + k <= p.degree()) t[j][k] = 0.0;
  return BivariatePolynomial(std::move(t));
}

bool all_small(const BivariatePolynomial& p, std::initializer_list<std::pair<int, int>> where,
               double tol) {
  for (auto [j, k] : where)
    if (std::abs(p.coeff(j, k)) > tol) return false;
  return true;
}

std::optional<SpecialCaseResult> cubic_with(const BivariatePolynomial& p, Complex s) {
  const auto t = vanishing_parameter(
      p, [&](Complex v) { return AffineSubstitution::shear_x(s, v); }, 0, 2);
  if (!t) return std::nullopt;

  const auto sub = AffineSubstitution::shear_x(s, *t);
  const BivariatePolynomial reduced = apply_substitution(p, sub);
  const double scale = std::max(p.max_abs_coeff(), reduced.max_abs_coeff());
  if (!all_small(reduced, {{0, 3}, {0, 2}}, 1e-8 * scale)) return std::nullopt;
  const BivariatePolynomial zeroed = with_zeros(reduced, {{0, 3}, {0, 2}});
  if (zeroed.degree() != 3 || zeroed.coeff(3, 0) == Complex{0.0}) return std::nullopt;

  // h~(t) = t (a30 t^2 + a21 t + a12), so zeta_1 = 0 leaves no remainder.
  std::vector<Complex> zetas{0.0};
  for (Complex z : univariate_roots(std::vector<Complex>{zeroed.coeff(1, 2), zeroed.coeff(2, 1),
                                                         zeroed.coeff(3, 0)}))
    zetas.push_back(z);
  MainBranch mb = main_branch(zeroed, zetas);
  if (mb.quotient.max_abs_coeff() > kRemainderTol * 1e3 * scale) return std::nullopt;

  SpecialCaseResult out;
  out.tree = mb.tree.back_substituted(sub);
  out.pencil = assemble_pencil(out.tree);
  out.substitution = sub;
  out.reduced = reduced;
  return out;
}

std::optional<SpecialCaseResult> cubic_core(const BivariatePolynomial& p) {
  const bool want_real = p.is_real();
  std::optional<SpecialCaseResult> best;
  bool best_real = false;
  for (const RootChoice& s :
       simple_roots({p.coeff(0, 3), p.coeff(1, 2), p.coeff(2, 1), p.coeff(3, 0)}))
    keep_better(best, best_real, cubic_with(p, s.value), s.real, want_real);
  return best;
}

std::optional<SpecialCaseResult> quartic_with(const AffineSubstitution& first,
                                              const BivariatePolynomial& p1z, double scale,
                                              Complex u) {
  const auto v = vanishing_parameter(
      p1z, [&](Complex w) { return AffineSubstitution::shear_y(u, w); }, 3, 0);
  if (!v) return std::nullopt;
  const auto second = AffineSubstitution::shear_y(u, *v);
  const BivariatePolynomial p2 = apply_substitution(p1z, second);
  scale = std::max(scale, p2.max_abs_coeff());
  if (!all_small(p2, {{4, 0}, {3, 0}, {0, 4}, {0, 3}}, 1e-8 * scale)) return std::nullopt;
  const BivariatePolynomial p2z = with_zeros(p2, {{4, 0}, {3, 0}, {0, 4}, {0, 3}});

  RepresentationTree reduced_tree;
  try {
    reduced_tree = reduced_quartic_tree(p2z);
  } catch (const DegenerateInput&) {
    return std::nullopt;
  }
  const auto composite = first.compose(second);
  SpecialCaseResult out;
  out.tree = reduced_tree.back_substituted(composite);
  out.pencil = assemble_pencil(out.tree);
  out.substitution = composite;
  out.reduced = p2;
  return out;
}

std::optional<SpecialCaseResult> quartic_core(const BivariatePolynomial& p) {
  const bool want_real = p.is_real();
  std::optional<SpecialCaseResult> best;
  bool best_real = false;
  for (const RootChoice& s : simple_roots(
           {p.coeff(0, 4), p.coeff(1, 3), p.coeff(2, 2), p.coeff(3, 1), p.coeff(4, 0)})) {
    const auto t = vanishing_parameter(
        p, [&](Complex v) { return AffineSubstitution::shear_x(s.value, v); }, 0, 3);
    if (!t) continue;
    const auto first = AffineSubstitution::shear_x(s.value, *t);
    const BivariatePolynomial p1 = apply_substitution(p, first);
    const double scale = std::max(p.max_abs_coeff(), p1.max_abs_coeff());
    if (!all_small(p1, {{0, 4}, {0, 3}}, 1e-8 * scale)) continue;
    const BivariatePolynomial p1z = with_zeros(p1, {{0, 4}, {0, 3}});

    // g(u) = a40 + a31 u + a22 u^2 + a13 u^3 of the intermediate polynomial.
    for (const RootChoice& u :
         simple_roots({p1z.coeff(4, 0), p1z.coeff(3, 1), p1z.coeff(2, 2), p1z.coeff(1, 3)}))
      keep_better(best, best_real, quartic_with(first, p1z, scale, u.value), s.real && u.real,
                  want_real);
  }
  return best;
}

std::optional<SpecialCaseResult> with_rotation(
    const BivariatePolynomial& p,
    std::optional<SpecialCaseResult> (*core)(const BivariatePolynomial&)) {
  const auto gamma = rotation_for(p);
  if (!gamma) return core(p);
  const auto rot = AffineSubstitution::shear_y(*gamma, 0.0);
  auto r = core(apply_substitution(p, rot));
  if (!r) return std::nullopt;
  r->tree = r->tree.back_substituted(rot);
  r->pencil = assemble_pencil(r->tree);
  r->substitution = rot.compose(r->substitution);
  return r;
}

SpecialCaseResult fallback(const BivariatePolynomial& p) {
  Lin2Result plain = build_tree(p);
  SpecialCaseResult out;
  out.tree = std::move(plain.tree);
  out.pencil = std::move(plain.pencil);
  out.reduced = p;
  out.fallback = true;
  return out;
}

}  // namespace

std::optional<SpecialCaseResult> try_cubic(const BivariatePolynomial& p) {
  return with_rotation(p, &cubic_core);
}

std::optional<SpecialCaseResult> try_quartic(const BivariatePolynomial& p) {
  return with_rotation(p, &quartic_core);
}

}  // namespace detail

RepresentationTree reduced_quartic_tree(const BivariatePolynomial& p) {
  if (p.degree() > 4) throw InvalidInput("reduced quartic tree needs degree <= 4");
  const Complex a31 = p.coeff(3, 1);
  if (std::abs(a31) <= 1e-10 * std::max(p.max_abs_coeff(), 1e-300))
    throw DegenerateInput("x^3 y coefficient vanishes");
  // a31 z^2 + a22 z + a13 = a31 (z - zeta1)(z - zeta2)
  const auto zetas =
      univariate_roots(std::vector<Complex>{p.coeff(1, 3), p.coeff(2, 2), a31});

  auto tree = RepresentationTree::single({p.coeff(0, 0), p.coeff(1, 0), p.coeff(0, 1)});
  const int nx = tree.add_node(0, LinearForm::x(), {0.0, p.coeff(2, 0), p.coeff(1, 1)});
  tree.add_node(0, LinearForm::y(), {0.0, 0.0, p.coeff(0, 2)});
  const int nxy = tree.add_node(nx, LinearForm::y(), {0.0, p.coeff(2, 1), p.coeff(1, 2)});
  tree.add_node(nxy, {0.0, 1.0, -zetas[0]}, {0.0, a31, -a31 * zetas[1]});
  return tree;
}

SpecialCaseResult special_case_cubic(const BivariatePolynomial& p) {
  if (p.degree() != 3) throw InvalidInput("special_case_cubic needs a degree-3 polynomial");
  if (auto r = detail::try_cubic(p)) return *r;
  return detail::fallback(p);
}

SpecialCaseResult special_case_quartic(const BivariatePolynomial& p) {
  if (p.degree() != 4) throw InvalidInput("special_case_quartic needs a degree-4 polynomial");
  if (auto r = detail::try_quartic(p)) return *r;
  return detail::fallback(p);
}

}  // namespace detrep
