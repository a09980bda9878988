#include "detrep/lin1.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <random>

namespace detrep {

bool degree_neglex_less(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.j > b.j;
}

MonomialTree MonomialTree::from_nodes(std::vector<Monomial> nodes) {
  std::sort(nodes.begin(), nodes.end(), degree_neglex_less);
  if (nodes.empty() || !(nodes.front() == Monomial{0, 0}))
    throw InvalidInput("monomial tree must contain the root 1");
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw InvalidInput("monomial tree has duplicate nodes");

  MonomialTree tree;
  tree.nodes_ = std::move(nodes);
  tree.parents_.assign(tree.nodes_.size(), -1);
  tree.edges_.assign(tree.nodes_.size(), EdgeVar::X);
  for (std::size_t i = 1; i < tree.nodes_.size(); ++i) {
    const Monomial m = tree.nodes_[i];
    if (auto p = tree.index_of({m.j - 1, m.k}); m.j > 0 && p) {
      tree.parents_[i] = static_cast<int>(*p);
      tree.edges_[i] = EdgeVar::X;
    } else if (auto q = tree.index_of({m.j, m.k - 1}); m.k > 0 && q) {
      tree.parents_[i] = static_cast<int>(*q);
      tree.edges_[i] = EdgeVar::Y;
    } else {
      throw InvalidInput("node x^" + std::to_string(m.j) + " y^" + std::to_string(m.k) +
                         " is not connected to the root");
    }
  }
  return tree;
}

MonomialTree::MonomialTree(std::vector<Monomial> nodes, std::vector<int> parents,
                           std::vector<EdgeVar> edges)
    : nodes_(std::move(nodes)), parents_(std::move(parents)), edges_(std::move(edges)) {
  validate();
}

void MonomialTree::validate() const {
  if (nodes_.empty() || !(nodes_.front() == Monomial{0, 0}))
    throw InvalidInput("monomial tree must start with the root 1");
  if (parents_.size() != nodes_.size() || edges_.size() != nodes_.size())
    throw InvalidInput("monomial tree arrays differ in length");
  if (parents_[0] != -1) throw InvalidInput("root must not have a parent");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!degree_neglex_less(nodes_[i - 1], nodes_[i]))
      throw InvalidInput("monomial tree nodes are not in degree negative lexicographic order");
    const int p = parents_[i];
    if (p < 0 || p >= static_cast<int>(i))
      throw InvalidInput("parent index must precede its child");
    const Monomial parent = nodes_[static_cast<std::size_t>(p)];
    const Monomial expected = edges_[i] == EdgeVar::X ? Monomial{parent.j + 1, parent.k}
                                                      : Monomial{parent.j, parent.k + 1};
    if (!(expected == nodes_[i])) throw InvalidInput("edge label does not match node monomials");
  }
}

std::optional<Index> MonomialTree::index_of(Monomial m) const noexcept {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), m, degree_neglex_less);
  if (it != nodes_.end() && *it == m) return static_cast<Index>(it - nodes_.begin());
  return std::nullopt;
}

int MonomialTree::max_degree() const noexcept {
  int d = 0;
  for (const Monomial& m : nodes_) d = std::max(d, m.degree());
  return d;
}

int psi(int n) {
  if (n < 1) throw InvalidInput("psi requires n >= 1");
  int count = 0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; j + k < n; ++k)
      if (k == 0 || j % 2 == 0) ++count;
  return count;
}

MonomialTree generic_tree(int n) {
  if (n < 1) throw InvalidInput("generic_tree requires n >= 1");
  std::vector<Monomial> nodes;
  for (int j = 0; j < n; ++j)
    for (int k = 0; j + k < n; ++k)
      if (k == 0 || j % 2 == 0) nodes.push_back({j, k});
  return MonomialTree::from_nodes(std::move(nodes));
}

std::vector<TermPlacement> first_row_assignment(const std::vector<Monomial>& terms, int degree,
                                                const MonomialTree& tree, SlotPriority priority) {
  static constexpr Slot node_first[] = {Slot::A, Slot::B, Slot::C};
  static constexpr Slot shift_first[] = {Slot::C, Slot::B, Slot::A};
  const Slot* order = priority == SlotPriority::NodeFirst ? node_first : shift_first;

  std::vector<TermPlacement> out;
  out.reserve(terms.size());
  for (const Monomial& t : terms) {
    std::optional<Index> col;
    Slot slot = Slot::A;
    if (t == Monomial{0, 0}) col = tree.index_of(t);
    for (int i = 0; i < 3 && !col; ++i) {
      slot = order[i];
      if (slot == Slot::A && t.j + t.k < degree)
        col = tree.index_of(t);
      else if (slot == Slot::B && t.j > 0)
        col = tree.index_of({t.j - 1, t.k});
      else if (slot == Slot::C && t.k > 0)
        col = tree.index_of({t.j, t.k - 1});
    }
    if (!col) throw CoverageError(t.j, t.k);
    out.push_back({t, *col, slot});
  }
  return out;
}

bool tree_covers(const MonomialTree& tree, const std::vector<Monomial>& terms,
                 int degree) noexcept {
  try {
    first_row_assignment(terms, degree, tree);
    return true;
  } catch (const CoverageError&) {
    return false;
  }
}

std::vector<Monomial> support(const BivariatePolynomial& p) {
  std::vector<Monomial> terms{{0, 0}};
  for (int d = 1; d <= p.degree(); ++d)
    for (int j = d; j >= 0; --j)
      if (p.coeff(j, d - j) != Complex{0.0}) terms.push_back({j, d - j});
  return terms;
}

std::vector<Monomial> support(const MatrixBivariatePolynomial& p) {
  std::vector<Monomial> terms{{0, 0}};
  for (int d = 1; d <= p.degree(); ++d)
    for (int j = d; j >= 0; --j)
      if (p.has_term(j, d - j)) terms.push_back({j, d - j});
  return terms;
}

Pencil assemble_pencil(const MatrixBivariatePolynomial& p, const MonomialTree& tree,
                       SlotPriority priority) {
  const Index kb = p.block_size();
  const Index m = tree.size();
  const Index dim = m * kb;
  const auto placements = first_row_assignment(support(p), p.degree(), tree, priority);

  Matrix A = Matrix::Zero(dim, dim);
  Matrix B = Matrix::Zero(dim, dim);
  Matrix C = Matrix::Zero(dim, dim);
  const Matrix I = Matrix::Identity(kb, kb);
  for (Index i = 1; i < m; ++i) {
    A.block(i * kb, i * kb, kb, kb) = I;
    const Index parent = tree.parent(i);
    Matrix& target = tree.edge(i) == EdgeVar::X ? B : C;
    target.block(i * kb, parent * kb, kb, kb) = -I;
  }
  for (const TermPlacement& t : placements) {
    Matrix& target = t.slot == Slot::A ? A : (t.slot == Slot::B ? B : C);
    target.block(0, t.column * kb, kb, kb) += p.coeff(t.term.j, t.term.k);
  }
  return Pencil(std::move(A), std::move(B), std::move(C), kb);
}

Pencil assemble_pencil(const BivariatePolynomial& p, const MonomialTree& tree,
                       SlotPriority priority) {
  return assemble_pencil(MatrixBivariatePolynomial::from_scalar(p), tree, priority);
}

// ---------------------------------------------------------------------------
// Greedy directed Steiner tree on the monomial lattice.

namespace {

constexpr int kHeuristicRestarts = 16;

struct Lattice {
  explicit Lattice(int n) : n(n), in_tree(static_cast<std::size_t>((n + 1) * (n + 1)), false) {}

  bool has(Monomial m) const {
    return m.j >= 0 && m.k >= 0 && m.j <= n && m.k <= n &&
           in_tree[static_cast<std::size_t>(m.j * (n + 1) + m.k)];
  }
  void set(Monomial m, bool v) { in_tree[static_cast<std::size_t>(m.j * (n + 1) + m.k)] = v; }

  int n;
  std::vector<bool> in_tree;
};

std::vector<Monomial> options_for(Monomial t) {
  if (t == Monomial{0, 0}) return {t};
  std::vector<Monomial> opts;
  if (t.j > 0) opts.push_back({t.j - 1, t.k});
  if (t.k > 0) opts.push_back({t.j, t.k - 1});
  return opts;
}

// Cheapest monotone lattice path from the root to target; nodes already in
// the tree are free. Returns the cost and the path (root first).
std::pair<int, std::vector<Monomial>> cheapest_path(const Lattice& lat, Monomial target,
                                                    bool prefer_x) {
  const int W = target.j + 1;
  const int H = target.k + 1;
  constexpr int inf = std::numeric_limits<int>::max() / 2;
  std::vector<int> cost(static_cast<std::size_t>(W * H), inf);
  auto at = [&](int a, int b) -> int& { return cost[static_cast<std::size_t>(a * H + b)]; };
  for (int a = 0; a < W; ++a)
    for (int b = 0; b < H; ++b) {
      const int own = lat.has({a, b}) ? 0 : 1;
      if (a == 0 && b == 0) {
        at(a, b) = 0;
        continue;
      }
      int best = inf;
      if (a > 0) best = std::min(best, at(a - 1, b));
      if (b > 0) best = std::min(best, at(a, b - 1));
      at(a, b) = best + own;
    }
  std::vector<Monomial> path{target};
  Monomial cur = target;
  while (!(cur == Monomial{0, 0})) {
    const bool can_x = cur.j > 0;
    const bool can_y = cur.k > 0;
    const bool take_x = can_x && (!can_y || (prefer_x ? at(cur.j - 1, cur.k) <= at(cur.j, cur.k - 1)
                                                       : at(cur.j - 1, cur.k) < at(cur.j, cur.k - 1)));
    if (take_x)
      cur = {cur.j - 1, cur.k};
    else
      cur = {cur.j, cur.k - 1};
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return {at(target.j, target.k), path};
}

}  // namespace

namespace {

// Steiner nodes grown for one terminal order; parent_of maps each non-root
// node to the node it hangs off.
struct Grown {
  std::vector<Monomial> nodes;
  std::map<std::pair<int, int>, Monomial> parent_of;
};

Grown grow(const std::vector<Monomial>& terminals, int degree, bool prefer_x) {
  Lattice lat(degree);
  lat.set({0, 0}, true);
  std::map<std::pair<int, int>, Monomial> parent_of;

  for (const Monomial& t : terminals) {
    const auto opts = options_for(t);
    if (std::any_of(opts.begin(), opts.end(), [&](Monomial o) { return lat.has(o); })) continue;
    int best_cost = std::numeric_limits<int>::max();
    std::vector<Monomial> best_path;
    for (const Monomial& o : opts) {
      auto [c, path] = cheapest_path(lat, o, prefer_x);
      if (c < best_cost) {
        best_cost = c;
        best_path = std::move(path);
      }
    }
    for (std::size_t i = 1; i < best_path.size(); ++i) {
      if (lat.has(best_path[i])) continue;
      lat.set(best_path[i], true);
      parent_of[{best_path[i].j, best_path[i].k}] = best_path[i - 1];
    }
  }

  // Drop leaves no terminal depends on, deepest first.
  auto has_child = [&](Monomial m) {
    for (const auto& [key, par] : parent_of)
      if (par == m && lat.has({key.first, key.second})) return true;
    return false;
  };
  auto still_covered = [&]() {
    return std::all_of(terminals.begin(), terminals.end(), [&](const Monomial& t) {
      const auto opts = options_for(t);
      return std::any_of(opts.begin(), opts.end(), [&](Monomial o) { return lat.has(o); });
    });
  };
  bool removed = true;
  while (removed) {
    removed = false;
    std::vector<Monomial> present;
    for (const auto& [key, par] : parent_of)
      if (lat.has({key.first, key.second})) present.push_back({key.first, key.second});
    std::sort(present.begin(), present.end(),
              [](const Monomial& a, const Monomial& b) { return degree_neglex_less(b, a); });
    for (const Monomial& m : present) {
      if (has_child(m)) continue;
      lat.set(m, false);
      if (still_covered()) {
        removed = true;
      } else {
        lat.set(m, true);
      }
    }
  }

  Grown g;
  g.nodes.push_back({0, 0});
  for (const auto& [key, par] : parent_of)
    if (lat.has({key.first, key.second})) {
      g.nodes.push_back({key.first, key.second});
      g.parent_of[key] = par;
    }
  return g;
}

}  // namespace

MonomialTree sparse_tree_heuristic(const std::vector<Monomial>& terms, int degree) {
  if (degree <= 1) return MonomialTree::from_nodes({{0, 0}});

  // The greedy result depends on the terminal order; a few deterministic
  // restarts (highest degree first, then seeded shuffles) keep the best.
  std::vector<Monomial> order = terms;
  std::sort(order.begin(), order.end(),
            [](const Monomial& a, const Monomial& b) { return degree_neglex_less(b, a); });
  std::mt19937 rng(7);
  std::optional<Grown> best;
  for (int round = 0; round < kHeuristicRestarts; ++round) {
    if (round > 0) std::shuffle(order.begin(), order.end(), rng);
    for (bool prefer_x : {true, false}) {
      Grown g = grow(order, degree, prefer_x);
      if (!best || g.nodes.size() < best->nodes.size()) best = std::move(g);
    }
  }

  std::vector<Monomial> nodes = best->nodes;
  const int generic_size = psi(degree);
  if (static_cast<int>(nodes.size()) >= generic_size) return generic_tree(degree);

  std::sort(nodes.begin(), nodes.end(), degree_neglex_less);
  std::vector<int> parents(nodes.size(), -1);
  std::vector<EdgeVar> edges(nodes.size(), EdgeVar::X);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const Monomial par = best->parent_of.at({nodes[i].j, nodes[i].k});
    auto it = std::lower_bound(nodes.begin(), nodes.end(), par, degree_neglex_less);
    parents[i] = static_cast<int>(it - nodes.begin());
    edges[i] = par.j + 1 == nodes[i].j ? EdgeVar::X : EdgeVar::Y;
  }
  return MonomialTree(std::move(nodes), std::move(parents), std::move(edges));
}

MonomialTree sparse_tree_heuristic(const BivariatePolynomial& p) {
  return sparse_tree_heuristic(support(p), p.degree());
}

MonomialTree sparse_tree_heuristic(const MatrixBivariatePolynomial& p) {
  return sparse_tree_heuristic(support(p), p.degree());
}

}  // namespace detrep
