#pragma once

#include <optional>
#include <vector>

#include "detrep/pencil.hpp"
#include "detrep/polynomial.hpp"

namespace detrep {

/// Exponent pair (j, k) of the monomial x^j y^k.
struct Monomial {
  int j = 0;
  int k = 0;

  int degree() const noexcept { return j + k; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree negative lexicographic order: lower total degree first, then the
/// larger x-exponent first.
bool degree_neglex_less(const Monomial& a, const Monomial& b) noexcept;

enum class EdgeVar { X, Y };

/// Rooted tree of monomials; each child is x or y times its parent.
///
/// Nodes are stored in degree negative lexicographic order with the root
/// (0, 0) first, so every parent index is smaller than its children's.
class MonomialTree {
 public:
  /// Builds a tree over a set of monomials. Each non-root node hangs off
  /// x^{j-1} y^k by an X-edge when that node is present, otherwise off
  /// x^j y^{k-1} by a Y-edge. Throws InvalidInput when the set is not
  /// connected to the root or holds duplicates.
  static MonomialTree from_nodes(std::vector<Monomial> nodes);

  /// Explicit layout; parents[i] < i and edges must be consistent.
  MonomialTree(std::vector<Monomial> nodes, std::vector<int> parents,
               std::vector<EdgeVar> edges);

  Index size() const noexcept { return static_cast<Index>(nodes_.size()); }
  const std::vector<Monomial>& nodes() const noexcept { return nodes_; }
  /// parent(0) == -1.
  int parent(Index i) const { return parents_.at(static_cast<std::size_t>(i)); }
  /// Meaningless for the root.
  EdgeVar edge(Index i) const { return edges_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& parents() const noexcept { return parents_; }
  const std::vector<EdgeVar>& edges() const noexcept { return edges_; }

  std::optional<Index> index_of(Monomial m) const noexcept;
  bool contains(Monomial m) const noexcept { return index_of(m).has_value(); }
  int max_degree() const noexcept;

 private:
  MonomialTree() = default;
  void validate() const;

  std::vector<Monomial> nodes_;
  std::vector<int> parents_;
  std::vector<EdgeVar> edges_;
};

/// Node count of generic_tree(n): |{(j,k) : j+k < n, k == 0 or j even}|.
int psi(int n);

/// Tree over {x^j y^k : j+k < n, k == 0 or j even}: an X-chain along k = 0
/// and, for every even j, a Y-chain rising from x^j.
MonomialTree generic_tree(int n);

enum class Slot { A, B, C };

/// Where the term x^j y^k goes in the first (block) row.
struct TermPlacement {
  Monomial term;
  Index column = 0;
  Slot slot = Slot::A;
};

/// Order in which the three possible slots of a term are tried.
enum class SlotPriority {
  /// A at (j,k) for j+k < n, then B at (j-1,k), then C at (j,k-1).
  NodeFirst,
  /// C, then B, then A: every first-row entry except the constant term is
  /// a pure x or y multiple.
  ShiftFirst,
};

/// Placement of every listed term for a polynomial of degree n. The
/// constant term always goes to slot A of the root. Throws CoverageError.
std::vector<TermPlacement> first_row_assignment(const std::vector<Monomial>& terms, int degree,
                                                const MonomialTree& tree,
                                                SlotPriority priority = SlotPriority::NodeFirst);

/// Nonzero terms of p (the constant term always included).
std::vector<Monomial> support(const BivariatePolynomial& p);
std::vector<Monomial> support(const MatrixBivariatePolynomial& p);

/// Pencil with det(A + xB + yC) = p(x, y).
Pencil assemble_pencil(const BivariatePolynomial& p, const MonomialTree& tree,
                       SlotPriority priority = SlotPriority::NodeFirst);
/// Block pencil with det(A + xB + yC) = det P(x, y).
Pencil assemble_pencil(const MatrixBivariatePolynomial& p, const MonomialTree& tree,
                       SlotPriority priority = SlotPriority::NodeFirst);

/// Small valid tree for a sparse polynomial (greedy Steiner-tree heuristic).
/// Never larger than generic_tree(degree).
MonomialTree sparse_tree_heuristic(const std::vector<Monomial>& terms,
                                   int degree);
MonomialTree sparse_tree_heuristic(const BivariatePolynomial& p);
MonomialTree sparse_tree_heuristic(const MatrixBivariatePolynomial& p);

/// True when every term of a degree-n polynomial has a placement in tree.
bool tree_covers(const MonomialTree& tree, const std::vector<Monomial>& terms,
                 int degree) noexcept;

}  // namespace detrep
