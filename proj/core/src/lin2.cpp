#include "detrep/lin2.hpp"

#include <algorithm>
#include <cmath>

#include "detrep/univariate.hpp"
#include "lin2_internal.hpp"

namespace detrep {

LinearForm LinearForm::back_substituted(const AffineSubstitution& sub) const {
  const AffineSubstitution inv = sub.inverse();
  const auto& G = inv.linear;
  const auto& g = inv.shift;
  return {a + b * g(0) + c * g(1), b * G(0, 0) + c * G(1, 0), b * G(0, 1) + c * G(1, 1)};
}

RepresentationTree RepresentationTree::single(LinearForm f) {
  RepresentationTree t;
  t.parent = {-1};
  t.edge = {LinearForm{}};
  t.coeff = {f};
  return t;
}

int RepresentationTree::add_node(int parent_index, LinearForm edge_form, LinearForm coeff_form) {
  if (parent_index < 0 || parent_index >= static_cast<int>(parent.size()))
    throw InvalidInput("parent index out of range");
  parent.push_back(parent_index);
  edge.push_back(edge_form);
  coeff.push_back(coeff_form);
  return static_cast<int>(parent.size()) - 1;
}

void RepresentationTree::attach(const RepresentationTree& sub, int at, LinearForm edge_form) {
  const int offset = static_cast<int>(parent.size());
  for (std::size_t i = 0; i < sub.parent.size(); ++i) {
    parent.push_back(i == 0 ? at : sub.parent[i] + offset);
    edge.push_back(i == 0 ? edge_form : sub.edge[i]);
    coeff.push_back(sub.coeff[i]);
  }
}

std::vector<BivariatePolynomial> RepresentationTree::node_polynomials() const {
  std::vector<BivariatePolynomial> q;
  q.reserve(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (i == 0) {
      q.push_back(BivariatePolynomial::constant(1.0));
    } else {
      q.push_back(q[static_cast<std::size_t>(parent[i])] * edge[i].polynomial());
    }
  }
  return q;
}

BivariatePolynomial RepresentationTree::represented() const {
  const auto q = node_polynomials();
  BivariatePolynomial sum;
  for (std::size_t i = 0; i < q.size(); ++i) sum += coeff[i].polynomial() * q[i];
  return sum;
}

RepresentationTree RepresentationTree::back_substituted(const AffineSubstitution& sub) const {
  RepresentationTree out = *this;
  for (std::size_t i = 0; i < out.parent.size(); ++i) {
    if (i > 0) out.edge[i] = edge[i].back_substituted(sub);
    out.coeff[i] = coeff[i].back_substituted(sub);
  }
  return out;
}

Pencil assemble_pencil(const RepresentationTree& tree) {
  const Index m = tree.size();
  Matrix A = Matrix::Zero(m, m);
  Matrix B = Matrix::Zero(m, m);
  Matrix C = Matrix::Zero(m, m);
  for (Index k = 0; k < m; ++k) {
    const LinearForm& f = tree.coeff[static_cast<std::size_t>(k)];
    A(0, k) = f.a;
    B(0, k) = f.b;
    C(0, k) = f.c;
  }
  for (Index k = 1; k < m; ++k) {
    const int p = tree.parent[static_cast<std::size_t>(k)];
    if (p < 0 || p >= k) throw InvalidInput("representation tree parent must precede its child");
    const LinearForm& e = tree.edge[static_cast<std::size_t>(k)];
    A(k, k) = 1.0;
    A(k, p) -= e.a;
    B(k, p) -= e.b;
    C(k, p) -= e.c;
  }
  return Pencil(std::move(A), std::move(B), std::move(C));
}

int theta(int n) {
  if (n < 1) throw InvalidInput("theta requires n >= 1");
  if (n <= 2) return n;
  if (n == 3) return 4;
  return n + 1 + theta(n - 3);
}

int lin2_size(int n) {
  if (n < 1) throw InvalidInput("lin2_size requires n >= 1");
  if (n <= 2) return n;
  if (n == 3) return 3;
  if (n == 4) return 5;
  return n + 1 + lin2_size(n - 3);
}

namespace detail {

std::optional<Complex> rotation_for(const BivariatePolynomial& p) {
  const int n = p.degree();
  const auto top = p.top_form();
  double top_scale = 0.0;
  for (const Complex& c : top) top_scale = std::max(top_scale, std::abs(c));
  if (std::abs(top[0]) > kLeadingTol * top_scale) return std::nullopt;

  // x~^n coefficient after y = y~ + gamma x~ is sum_i top[i] gamma^i.
  const Complex candidates[] = {{1.0, 0.0},  {-1.0, 0.0}, {0.0, 1.0},  {0.0, -1.0},
                                {0.5, 0.0},  {-0.5, 0.0}, {0.5, 0.5},  {-0.5, 0.5}};
  Complex best = candidates[0];
  double best_value = -1.0;
  for (const Complex& g : candidates) {
    if (p.is_real() && g.imag() != 0.0) continue;
    Complex v = 0.0;
    for (int i = n; i >= 0; --i) v = v * g + top[static_cast<std::size_t>(i)];
    const double score = std::abs(v) / std::pow(std::max(1.0, std::abs(g)), n);
    if (score > best_value) {
      best_value = score;
      best = g;
    }
  }
  if (best_value <= kLeadingTol * top_scale) {
    for (const Complex& g : candidates) {
      Complex v = 0.0;
      for (int i = n; i >= 0; --i) v = v * g + top[static_cast<std::size_t>(i)];
      if (std::abs(v) > best_value) {
        best_value = std::abs(v);
        best = g;
      }
    }
  }
  return best;
}

MainBranch main_branch(const BivariatePolynomial& p, const std::vector<Complex>& zetas) {
  const int n = p.degree();
  if (n < 2 || static_cast<int>(zetas.size()) != n)
    throw InvalidInput("main branch needs degree >= 2 and n zeros");
  const Complex lead = p.coeff(n, 0);

  MainBranch mb;
  mb.tree = RepresentationTree::single({p.coeff(0, 0), p.coeff(1, 0), p.coeff(0, 1)});
  std::vector<BivariatePolynomial> q{BivariatePolynomial::constant(1.0)};
  for (int k = 1; k < n; ++k) {
    const LinearForm e{0.0, 1.0, -zetas[static_cast<std::size_t>(k - 1)]};
    q.push_back(q.back() * e.polynomial());
    mb.tree.add_node(k - 1, e, LinearForm{});
  }
  // f_k for 2 <= k <= n-1 (1-based); beta_k is the x^{k-2} y coefficient of q_k.
  for (int k = 2; k <= n - 1; ++k) {
    const Complex alpha_k0 = p.coeff(k, 0);
    const Complex beta = q[static_cast<std::size_t>(k - 1)].coeff(k - 2, 1);
    mb.tree.coeff[static_cast<std::size_t>(k - 1)] = {0.0, alpha_k0,
                                                      p.coeff(k - 1, 1) - alpha_k0 * beta};
  }
  mb.tree.coeff[static_cast<std::size_t>(n - 1)] = {0.0, lead,
                                                    -lead * zetas[static_cast<std::size_t>(n - 1)]};

  BivariatePolynomial sum;
  for (int k = 0; k < n; ++k)
    sum += mb.tree.coeff[static_cast<std::size_t>(k)].polynomial() * q[static_cast<std::size_t>(k)];
  mb.remainder = p - sum;

  const int rd = mb.remainder.degree();
  if (rd >= 2) {
    auto t = BivariatePolynomial::empty_table(rd - 2);
    for (int j = 0; j <= rd - 2; ++j)
      for (int k = 0; k <= rd - 2 - j; ++k) t[j][k] = mb.remainder.coeff(j, k + 2);
    mb.quotient = BivariatePolynomial(std::move(t));
  }
  return mb;
}

RepresentationTree represent(const BivariatePolynomial& p, const Context& ctx) {
  const int n = p.degree();
  if (n == 0) return RepresentationTree::single({p.coeff(0, 0), 0.0, 0.0});
  if (n == 1) return RepresentationTree::single({p.coeff(0, 0), p.coeff(1, 0), p.coeff(0, 1)});

  if (ctx.special_cases && (n == 3 || n == 4)) {
    auto special = n == 3 ? try_cubic(p) : try_quartic(p);
    if (special) {
      if (ctx.substitutions)
        ctx.substitutions->push_back({n == 3 ? "cubic" : "quartic", ctx.level, special->substitution});
      return special->tree;
    }
  }

  if (auto gamma = rotation_for(p)) {
    const auto rot = AffineSubstitution::shear_y(*gamma, 0.0);
    const BivariatePolynomial rotated = apply_substitution(p, rot);
    if (ctx.substitutions) ctx.substitutions->push_back({"rotation", ctx.level, rot});
    return represent(rotated, ctx).back_substituted(rot);
  }

  const auto top = p.top_form();
  std::vector<Complex> h(top.rbegin(), top.rend());  // h(t) = sum_i a_{i,n-i} t^i
  const auto zetas = univariate_roots(h);
  MainBranch mb = main_branch(p, zetas);

  const double tol = kRemainderTol * p.max_abs_coeff();
  const BivariatePolynomial s = mb.quotient.chopped(tol);
  if (ctx.levels) ctx.levels->push_back({n, zetas, mb.remainder});

  RepresentationTree tree = std::move(mb.tree);
  if (s.is_zero()) return tree;
  const int bridge = tree.add_node(0, LinearForm::y(), LinearForm{});
  if (s.degree() == 0) {
    tree.coeff[static_cast<std::size_t>(bridge)] = {0.0, 0.0, s.coeff(0, 0)};
    return tree;
  }
  Context inner = ctx;
  inner.level = ctx.level + 1;
  tree.attach(represent(s, inner), bridge, LinearForm::y());
  return tree;
}

}  // namespace detail

namespace {

Lin2Result run(const BivariatePolynomial& p, bool special_cases) {
  if (p.is_zero()) throw DegenerateInput("cannot linearize the zero polynomial");
  Lin2Result result;
  detail::Context ctx;
  ctx.special_cases = special_cases;
  ctx.substitutions = &result.substitutions;
  ctx.levels = &result.levels;
  result.tree = detail::represent(p, ctx);
  result.pencil = assemble_pencil(result.tree);
  return result;
}

}  // namespace

Lin2Result build_tree(const BivariatePolynomial& p) { return run(p, false); }

Lin2Result linearize(const BivariatePolynomial& p, const Lin2Options& options) {
  return run(p, options.special_cases);
}

}  // namespace detrep
