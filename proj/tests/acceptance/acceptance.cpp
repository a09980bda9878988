// Acceptance checks. One line per criterion; exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace detrep;

namespace {

struct Outcome {
  bool pass = true;
  int failures = 0;
  std::vector<std::string> messages;  // first few failures
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (++failures <= 5) messages.push_back(what);
  }
};

using Point = std::pair<Complex, Complex>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double max_identity_error(const Pencil& pen, const BivariatePolynomial& p, std::mt19937_64& rng,
                          int points = 20) {
  double worst = 0.0;
  for (int i = 0; i < points; ++i)
    worst = std::max(worst, oracle::identity_error(pen, p, oracle::disk_point(rng),
                                                   oracle::disk_point(rng)));
  return worst;
}

double max_identity_error(const Pencil& pen, const MatrixBivariatePolynomial& p,
                          std::mt19937_64& rng, int points = 20) {
  double worst = 0.0;
  for (int i = 0; i < points; ++i)
    worst = std::max(worst, oracle::identity_error(pen, p, oracle::disk_point(rng),
                                                   oracle::disk_point(rng)));
  return worst;
}

BivariatePolynomial cubic() { return BivariatePolynomial({{1, 3, 6, 10}, {2, 5, 9}, {4, 8}, {7}}); }

BivariatePolynomial with_top_form(std::mt19937_64& rng, int n, const BivariatePolynomial& top,
                                  bool complex) {
  auto t = oracle::random_polynomial(rng, n, complex).table();
  for (int j = 0; j <= n; ++j)
    t[static_cast<std::size_t>(j)][static_cast<std::size_t>(n - j)] = top.coeff(j, n - j);
  return BivariatePolynomial(std::move(t));
}

// Keeps each coefficient with probability 1/2; constant and x^n stay.
BivariatePolynomial sparsified(std::mt19937_64& rng, const BivariatePolynomial& p) {
  auto t = p.table();
  const int n = p.degree();
  std::bernoulli_distribution keep(0.5);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; j + k <= n; ++k)
      if (!(j == 0 && k == 0) && !(j == n && k == 0) && !keep(rng))
        t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = 0.0;
  return BivariatePolynomial(std::move(t));
}

std::vector<Point> points(const std::vector<RootRecord>& roots) {
  std::vector<Point> out;
  for (const auto& r : roots)
    for (int m = 0; m < r.multiplicity; ++m) out.emplace_back(r.x, r.y);
  return out;
}

// 1. Pencil and Delta sizes.
void sizes(Outcome& o) {
  const int psi_want[] = {1, 3, 5, 8, 11, 15, 19, 24};
  const int theta_want[] = {1, 2, 4, 6, 8, 11, 14, 17};
  for (int n = 1; n <= 8; ++n) {
    o.require(psi(n) == psi_want[n - 1], "psi(" + std::to_string(n) + ")");
    o.require(theta(n) == theta_want[n - 1], "theta(" + std::to_string(n) + ")");
  }
  const int lin1_delta[] = {25, 64, 121, 225, 361, 576, 841, 1225};
  const int lin2_delta[] = {9, 25, 64, 100, 169, 289, 400, 576};
  std::mt19937_64 rng(1);
  for (int n = 3; n <= 10; ++n) {
    const auto p = oracle::random_polynomial(rng, n, false);
    const Index s1 = assemble_pencil(p, sparse_tree_heuristic(p)).size();
    const Index s2 = linearize(p).pencil.size();
    o.require(s1 * s1 == lin1_delta[n - 3], "Lin1 delta size at n=" + std::to_string(n));
    o.require(s2 * s2 == lin2_delta[n - 3], "Lin2 delta size at n=" + std::to_string(n));
    o.require(psi(n) * psi(n) == lin1_delta[n - 3] && lin2_size(n) * lin2_size(n) == lin2_delta[n - 3],
              "size formulas at n=" + std::to_string(n));
  }
  o.detail << "psi(1..8), theta(1..8), Delta sizes n=3..10";
}

// 2. Reference pencil layouts.
void fixtures(Outcome& o) {
  int checked = 0;
  auto same = [&](Complex got, Complex want, const std::string& where) {
    ++checked;
    o.require(got == want, where);
  };

  {  // 5x5 cubic
    const Pencil p = assemble_pencil(cubic(), generic_tree(3), SlotPriority::ShiftFirst);
    o.require(p.dimension() == 5, "cubic pencil size");
    const Complex row[5][3] = {{1, 2, 3}, {0, 4, 5}, {0, 0, 6}, {0, 7, 8}, {0, 9, 10}};
    for (Index c = 0; c < 5; ++c) {
      same(p.A(0, c), row[c][0], "cubic A(0," + std::to_string(c) + ")");
      same(p.B(0, c), row[c][1], "cubic B(0," + std::to_string(c) + ")");
      same(p.C(0, c), row[c][2], "cubic C(0," + std::to_string(c) + ")");
    }
    for (Index i = 1; i < 5; ++i)
      for (Index j = 0; j < 5; ++j) {
        const bool x = (i == 1 && j == 0) || (i == 3 && j == 1);
        const bool y = (i == 2 && j == 0) || (i == 4 && j == 2);
        same(p.A(i, j), i == j ? 1.0 : 0.0, "cubic A");
        same(p.B(i, j), x ? -1.0 : 0.0, "cubic B");
        same(p.C(i, j), y ? -1.0 : 0.0, "cubic C");
      }
  }

  {  // 4x4 representation tree
    auto t = RepresentationTree::single({1, 3, 2});
    const int n2 = t.add_node(0, {0, 1, -1}, {1, 2, 0});
    t.add_node(n2, {0, 1, 1}, {0, 1, 3});
    t.add_node(0, {0, 2, -1}, {0, 2, -1});
    const BivariatePolynomial expected({{1, 1, 1, -3}, {4, -6, -1}, {6, 3}, {1}});
    o.require(t.represented() == expected, "4x4 tree polynomial");
    const Pencil m = assemble_pencil(t);
    const Complex want[4][4][3] = {
        {{1, 3, 2}, {1, 2, 0}, {0, 1, 3}, {0, 2, -1}},
        {{0, -1, 1}, {1, 0, 0}, {0, 0, 0}, {0, 0, 0}},
        {{0, 0, 0}, {0, -1, -1}, {1, 0, 0}, {0, 0, 0}},
        {{0, -2, 1}, {0, 0, 0}, {0, 0, 0}, {1, 0, 0}}};
    for (Index r = 0; r < 4; ++r)
      for (Index c = 0; c < 4; ++c) {
        const std::string at = "4x4 (" + std::to_string(r) + "," + std::to_string(c) + ")";
        same(m.A(r, c), want[r][c][0], at);
        same(m.B(r, c), want[r][c][1], at);
        same(m.C(r, c), want[r][c][2], at);
      }
  }

  std::mt19937_64 rng(2);
  auto blk = [](const Matrix& m, Index b, Index r, Index c) { return Matrix(m.block(b * r, b * c, b, b)); };

  {  // degree-3 block pencil over {1, x, y, x^2, xy, y^2}
    const auto P = oracle::random_matrix_polynomial(rng, 3, 2);
    const MonomialTree tree = MonomialTree::from_nodes({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
    const Pencil pen = assemble_pencil(P, tree);
    const Matrix Z = Matrix::Zero(2, 2), I = Matrix::Identity(2, 2);
    const Matrix wantA[] = {P.coeff(0, 0), P.coeff(1, 0), P.coeff(0, 1), P.coeff(2, 0), P.coeff(1, 1), P.coeff(0, 2)};
    const Matrix wantB[] = {Z, Z, Z, P.coeff(3, 0), P.coeff(2, 1), P.coeff(1, 2)};
    const Matrix wantC[] = {Z, Z, Z, Z, Z, P.coeff(0, 3)};
    o.require(pen.size() == 6 && pen.block_size == 2, "block pencil size");
    for (Index c = 0; c < 6; ++c) {
      ++checked;
      o.require(blk(pen.A, 2, 0, c) == wantA[c] && blk(pen.B, 2, 0, c) == wantB[c] &&
                    blk(pen.C, 2, 0, c) == wantC[c],
                "block pencil first row col " + std::to_string(c));
    }
    const std::pair<int, int> xs[] = {{1, 0}, {3, 1}, {4, 2}};
    const std::pair<int, int> ys[] = {{2, 0}, {5, 2}};
    for (Index r = 1; r < 6; ++r)
      for (Index c = 0; c < 6; ++c) {
        bool x = false, y = false;
        for (auto [a, b] : xs) x |= a == r && b == c;
        for (auto [a, b] : ys) y |= a == r && b == c;
        ++checked;
        o.require(blk(pen.A, 2, r, c) == (r == c ? I : Z) && blk(pen.B, 2, r, c) == (x ? Matrix(-I) : Z) &&
                      blk(pen.C, 2, r, c) == (y ? Matrix(-I) : Z),
                  "block pencil (" + std::to_string(r) + "," + std::to_string(c) + ")");
      }
  }

  {  // sparse degree-6 block pencil on 11 nodes
    MatrixBivariatePolynomial::Table t(7);
    for (int j = 0; j <= 6; ++j) t[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(7 - j), Matrix::Zero(2, 2));
    const std::pair<int, int> terms[] = {{0, 0}, {1, 0}, {0, 1}, {0, 3}, {2, 2}, {4, 1}, {1, 4}, {6, 0}, {2, 4}};
    std::uniform_real_distribution<double> u(-1, 1);
    for (auto [j, k] : terms) {
      Matrix m(2, 2);
      for (auto& v : m.reshaped()) v = Complex(u(rng), u(rng));
      t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = m;
    }
    const MatrixBivariatePolynomial P(t);
    const MonomialTree tree = MonomialTree::from_nodes(
        {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {3, 0}, {1, 2}, {4, 0}, {1, 3}, {5, 0}, {2, 3}});
    const Pencil pen = assemble_pencil(P, tree, SlotPriority::ShiftFirst);
    o.require(pen.size() == 11, "sparse pencil size");
    const Matrix Z = Matrix::Zero(2, 2), I = Matrix::Identity(2, 2);
    // (column, slot matrix, coefficient); x^2 y^2 and x^2 y^4 take their only feasible slot.
    struct Want {
      Index col;
      char slot;
      int j, k;
    };
    const Want first[] = {{0, 'A', 0, 0}, {0, 'B', 1, 0}, {0, 'C', 0, 1}, {4, 'C', 0, 3}, {7, 'C', 4, 1},
                          {8, 'C', 1, 4}, {9, 'B', 6, 0}, {6, 'B', 2, 2}, {10, 'C', 2, 4}};
    for (const Want& w : first) {
      const Matrix& m = w.slot == 'A' ? pen.A : w.slot == 'B' ? pen.B : pen.C;
      ++checked;
      o.require(blk(m, 2, 0, w.col) == P.coeff(w.j, w.k),
                "sparse pencil P" + std::to_string(w.j) + std::to_string(w.k));
    }
    int nonzero = 0;
    const std::pair<int, int> xs[] = {{1, 0}, {3, 1}, {5, 3}, {6, 4}, {7, 5}, {9, 7}, {10, 8}};
    const std::pair<int, int> ys[] = {{2, 0}, {4, 2}, {8, 6}};
    for (Index r = 1; r < 11; ++r)
      for (Index c = 0; c < 11; ++c) {
        bool x = false, y = false;
        for (auto [a, b] : xs) x |= a == r && b == c;
        for (auto [a, b] : ys) y |= a == r && b == c;
        ++checked;
        o.require(blk(pen.A, 2, r, c) == (r == c ? I : Z) && blk(pen.B, 2, r, c) == (x ? Matrix(-I) : Z) &&
                      blk(pen.C, 2, r, c) == (y ? Matrix(-I) : Z),
                  "sparse pencil (" + std::to_string(r) + "," + std::to_string(c) + ")");
        nonzero += (blk(pen.A, 2, r, c) + blk(pen.B, 2, r, c) + blk(pen.C, 2, r, c)).isZero() ? 0 : 1;
      }
    o.require(nonzero == 20, "sparse pencil has " + std::to_string(nonzero) + " nonzero blocks below row 0");
  }
  o.detail << checked << " entries of the 5x5, 4x4, block and 11-node pencils";
}

// 3. det(A + xB + yC) = p on every construction path.
void identity(Outcome& o) {
  std::mt19937_64 rng(3);
  double worst = 0.0;
  int pencils = 0;
  auto check = [&](const Pencil& pen, const BivariatePolynomial& p, const std::string& path) {
    const double e = max_identity_error(pen, p, rng);
    worst = std::max(worst, e);
    ++pencils;
    o.require(e <= 1e-9, path + " n=" + std::to_string(p.degree()) + " error " + num(e));
  };
  for (int n = 1; n <= 10; ++n) {
    for (int rep = 0; rep < 50; ++rep) {
      const bool complex = rep % 2 == 1;
      const auto p = oracle::random_polynomial(rng, n, complex);
      check(assemble_pencil(p, generic_tree(n)), p, "lin1 node-first");
      check(assemble_pencil(p, generic_tree(n), SlotPriority::ShiftFirst), p, "lin1 shift-first");
      const auto sp = sparsified(rng, p);
      check(assemble_pencil(sp, sparse_tree_heuristic(sp)), sp, "lin1 sparse tree");
      check(linearize(p).pencil, p, "lin2");
      check(build_tree(p).pencil, p, "lin2 plain");
      if (n >= 2 && rep < 10) {
        auto t = p.table();
        t[static_cast<std::size_t>(n)][0] = 0.0;
        const BivariatePolynomial r(t);
        check(linearize(r).pencil, r, "lin2 rotation");
        check(build_tree(r).pencil, r, "lin2 plain rotation");
      }
      if (n == 3) check(special_case_cubic(p).pencil, p, "cubic special case");
      if (n == 4) check(special_case_quartic(p).pencil, p, "quartic special case");
    }
  }

  // Fallbacks: repeated roots of the top form.
  const auto l1 = BivariatePolynomial::linear(0, 1, 2);
  const auto a = BivariatePolynomial::linear(0, 1, -1);
  const auto b = BivariatePolynomial::linear(0, 1, 1);
  const auto y = BivariatePolynomial::monomial(0, 1);
  const BivariatePolynomial cubic_tops[] = {l1 * l1 * l1, y * y * y, a * a * b};
  const BivariatePolynomial quartic_tops[] = {a * a * b * b, a * a * a * a, a * a * a * b, y * y * y * y};
  int fallbacks = 0;
  for (int rep = 0; rep < 10; ++rep) {
    for (const auto& top : cubic_tops) {
      const auto c = with_top_form(rng, 3, top, rep % 2 == 1);
      const SpecialCaseResult s = special_case_cubic(c);
      fallbacks += s.fallback;
      check(s.pencil, c, "cubic fallback");
      check(linearize(c).pencil, c, "lin2 cubic fallback");
    }
    for (const auto& top : quartic_tops) {
      const auto q = with_top_form(rng, 4, top, rep % 2 == 1);
      const SpecialCaseResult s = special_case_quartic(q);
      fallbacks += s.fallback;
      check(s.pencil, q, "quartic fallback");
      check(linearize(q).pencil, q, "lin2 quartic fallback");
    }
  }
  o.require(fallbacks > 0, "no fallback path was exercised");

  double worst_matrix = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 1 + rep % 5;
    const int block = 1 + rep % 3;
    const auto P = oracle::random_matrix_polynomial(rng, n, block);
    for (const Pencil& pen : {assemble_pencil(P, generic_tree(n)), assemble_pencil(P, sparse_tree_heuristic(P))}) {
      const double e = max_identity_error(pen, P, rng);
      worst_matrix = std::max(worst_matrix, e);
      o.require(e <= 1e-9, "matrix polynomial n=" + std::to_string(n) + " block " +
                               std::to_string(block) + " error " + num(e));
    }
  }
  o.detail << pencils << " scalar pencils max error " << num(worst)
           << ", 40 matrix pencils max error " << num(worst_matrix) << ", " << fallbacks << " fallbacks";
}

// 4. Random dense systems, both linearizations.
void end_to_end(Outcome& o) {
  std::mt19937_64 rng(4);
  double worst_acc = 0.0, worst_gap = 0.0;
  int systems = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      const bool complex = rep >= 20;
      const auto p = oracle::random_polynomial(rng, n, complex);
      const auto q = oracle::random_polynomial(rng, n, complex);
      const std::string tag = "n=" + std::to_string(n) + (complex ? " complex #" : " real #") + std::to_string(rep % 20);
      std::vector<Point> sets[2];
      int k = 0;
      for (auto method : {Linearization::Lin1, Linearization::Lin2}) {
        SolveOptions opts;
        opts.linearization = method;
        const auto roots = solve_system(p, q, opts);
        o.require(static_cast<int>(roots.size()) == n * n,
                  tag + (k ? " lin2 " : " lin1 ") + std::to_string(roots.size()) + " roots");
        for (const auto& r : roots) worst_acc = std::max(worst_acc, r.accuracy);
        for (const auto& r : roots)
          o.require(r.accuracy <= 1e-6, tag + " accuracy " + num(r.accuracy));
        sets[k++] = points(roots);
      }
      const double gap = oracle::match_distance(sets[0], sets[1]);
      worst_gap = std::max(worst_gap, gap);
      o.require(gap <= 1e-7, tag + " lin1/lin2 distance " + num(gap));
      ++systems;
    }
  }
  o.detail << systems << " systems, max accuracy " << num(worst_acc)
           << ", max lin1/lin2 distance " << num(worst_gap);
}

// 5. x^9 + y^9 - 1, x^10 + y^10 - 1.
void ex005(Outcome& o) {
  auto fermat = [](int n) {
    auto t = BivariatePolynomial::empty_table(n);
    t[0][0] = -1.0;
    t[0][static_cast<std::size_t>(n)] = 1.0;
    t[static_cast<std::size_t>(n)][0] = 1.0;
    return BivariatePolynomial(std::move(t));
  };
  const auto p = fermat(9);
  const auto q = fermat(10);
  const TwoParameterProblem prob = linearize_system(p, q, Linearization::Lin2);
  o.require(prob.first.size() == 9, "p pencil size " + std::to_string(prob.first.size()));
  o.require(prob.second.size() == 10, "q pencil size " + std::to_string(prob.second.size()));
  const DeltaTriple d = operator_determinants(prob);
  o.require(d.rows() == 90, "Delta size " + std::to_string(d.rows()));
  Eigen::JacobiSVD<Matrix> svd(d.d0);
  const double ratio = svd.singularValues()(svd.singularValues().size() - 1) / svd.singularValues()(0);
  o.require(ratio > 1e-12, "Delta0 singular, ratio " + num(ratio));

  SolveOptions opts;
  opts.linearization = Linearization::Lin2;
  const SolveReport rep = solve_system_report(p, q, opts);
  o.require(!rep.singular, "solver took the singular path");
  const auto roots = points(rep.roots);
  o.require(roots.size() == 90, std::to_string(roots.size()) + " roots");
  double worst = 0.0;
  for (const auto& r : rep.roots) worst = std::max(worst, r.residual);
  o.require(worst <= 1e-8, "residual " + num(worst));
  o.detail << "pencils 9 and 10, Delta0 90 (sigma ratio " << num(ratio) << "), "
           << roots.size() << " roots, max residual " << num(worst);
}

// 6. Singular Delta0 from Lin1 on cubics.
void singular_path(Outcome& o) {
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const bool complex = rep % 2 == 1;
    const auto p = oracle::random_polynomial(rng, 3, complex);
    const auto q = oracle::random_polynomial(rng, 3, complex);
    const std::string tag = "system " + std::to_string(rep);
    const DeltaTriple d = operator_determinants(linearize_system(p, q, Linearization::Lin1));
    o.require(d.rows() == 25, tag + " Delta size " + std::to_string(d.rows()));
    Eigen::JacobiSVD<Matrix> svd(d.d0);
    const auto& s = svd.singularValues();
    o.require(s(s.size() - 1) <= 1e-12 * s(0), tag + " Delta0 is not singular");

    StaircaseOptions st;
    st.rank_tol = 1e-8;
    const RegularPart part = extract_regular_part(d, st);
    std::vector<RootRecord> kept;
    for (const EigenSolution& e : solve_regular(part.reduced)) {
      const NewtonResult nr = newton_refine(p, q, e.x, e.y, 2);
      if (backward_error(p, q, nr.x, nr.y) > 1e-6) continue;
      bool dup = false;
      for (const auto& k : kept) dup |= std::max(std::abs(k.x - nr.x), std::abs(k.y - nr.y)) <= 1e-8;
      if (!dup) kept.push_back({nr.x, nr.y});
    }
    o.require(kept.size() == 9, tag + " " + std::to_string(kept.size()) + " roots");
    const double gap = oracle::match_distance(points(kept), oracle::resultant_roots(p, q));
    worst = std::max(worst, gap);
    o.require(gap <= 1e-7, tag + " oracle distance " + num(gap));
  }
  o.detail << "10 systems, Delta 25 reduced to 9, max oracle distance " << num(worst);
}

// 7. Vanishing coefficients after the cubic and quartic substitutions.
void special_cases(Outcome& o) {
  std::mt19937_64 rng(7);
  double worst_coeff = 0.0, worst_sub = 0.0, worst_det = 0.0;
  for (int n : {3, 4}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto p = oracle::random_polynomial(rng, n, rep % 2 == 1);
      const std::string tag = "n=" + std::to_string(n) + " #" + std::to_string(rep);
      const SpecialCaseResult s = n == 3 ? special_case_cubic(p) : special_case_quartic(p);
      o.require(!s.fallback, tag + " fell back");
      const double norm = p.max_abs_coeff();
      const std::vector<std::pair<int, int>> zero =
          n == 3 ? std::vector<std::pair<int, int>>{{0, 3}, {0, 2}}
                 : std::vector<std::pair<int, int>>{{3, 0}, {4, 0}, {0, 3}, {0, 4}};
      for (auto [j, k] : zero) {
        const double c = std::abs(s.reduced.coeff(j, k)) / norm;
        worst_coeff = std::max(worst_coeff, c);
        o.require(c <= 1e-10, tag + " coefficient x^" + std::to_string(j) + "y^" + std::to_string(k) + " " + num(c));
      }
      // The reduced polynomial is p composed with the substitution.
      for (int i = 0; i < 5; ++i) {
        const Complex xt = oracle::disk_point(rng), yt = oracle::disk_point(rng);
        const auto [x, y] = s.substitution.map(xt, yt);
        const oracle::LComplex ref = oracle::eval(p, x, y);
        const double scale = s.reduced.abs_coeff_sum();
        const double e = std::abs(Complex(static_cast<double>(ref.real()), static_cast<double>(ref.imag())) - s.reduced(xt, yt)) / scale;
        worst_sub = std::max(worst_sub, e);
        o.require(e <= 1e-12, tag + " substitution mismatch " + num(e));
      }
      const double e = max_identity_error(s.pencil, p, rng);
      worst_det = std::max(worst_det, e);
      o.require(e <= 1e-9, tag + " determinant identity " + num(e));
    }
  }
  o.detail << "100 polynomials, max |coeff|/|p| " << num(worst_coeff)
           << ", substitution error " << num(worst_sub) << ", identity error " << num(worst_det);
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"1 size tables", sizes},
      {"2 fixture pencils", fixtures},
      {"3 determinant identity", identity},
      {"4 end-to-end roots", end_to_end},
      {"5 ex005", ex005},
      {"6 singular path", singular_path},
      {"7 special-case substitutions", special_cases},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.str().c_str());
    if (!o.pass) {
      std::printf("       %d failed checks:", o.failures);
      for (const auto& m : o.messages) std::printf(" [%s]", m.c_str());
      std::printf("\n");
    }
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
