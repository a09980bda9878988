#include "json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace detrep::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::string member(const std::string& where, const char* name) {
  return where + "." + name;
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

double real(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

// null stands for +inf, which JSON cannot spell.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double real_or_inf(const json& j, const std::string& where) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return real(j, where);
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": " + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void write_json(const json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot write file");
  out << dump(doc);
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  fail(where, "expected a number or [re, im]");
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  array(j, where);
  const auto rows = static_cast<Index>(j.size());
  const Index cols = rows ? static_cast<Index>(array(j[0], at(where, 0)).size()) : 0;
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const std::string rw = at(where, static_cast<std::size_t>(r));
    const json& row = array(j[static_cast<std::size_t>(r)], rw);
    if (static_cast<Index>(row.size()) != cols) fail(rw, "ragged matrix row");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                  at(rw, static_cast<std::size_t>(c)));
  }
  return m;
}

json to_json(const BivariatePolynomial& p) {
  json rows = json::array();
  for (const auto& row : p.table()) {
    json out = json::array();
    for (Complex c : row) out.push_back(to_json(c));
    rows.push_back(std::move(out));
  }
  return {{"degree", p.degree()}, {"coeffs", std::move(rows)}};
}

json to_json(const MatrixBivariatePolynomial& p) {
  json rows = json::array();
  for (const auto& row : p.table()) {
    json out = json::array();
    for (const Matrix& c : row) out.push_back(to_json(c));
    rows.push_back(std::move(out));
  }
  return {{"degree", p.degree()}, {"block_size", p.block_size()}, {"coeffs", std::move(rows)}};
}

namespace {

// Rows must form the triangle j = 0..n, k = 0..n-j.
void check_triangle(const json& coeffs, int degree, const std::string& where) {
  if (degree < 0) fail(member(where, "degree"), "must be non-negative");
  array(coeffs, where);
  if (static_cast<int>(coeffs.size()) != degree + 1)
    fail(where, "expected " + std::to_string(degree + 1) + " rows for degree " +
                    std::to_string(degree));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto want = static_cast<std::size_t>(degree) - j + 1;
    if (array(coeffs[j], at(where, j)).size() != want)
      fail(at(where, j), "expected " + std::to_string(want) + " entries");
  }
}

}  // namespace

BivariatePolynomial scalar_polynomial_from_json(const json& j, const std::string& where) {
  const int degree = integer(field(j, "degree", where), member(where, "degree"));
  const std::string cw = member(where, "coeffs");
  const json& coeffs = field(j, "coeffs", where);
  check_triangle(coeffs, degree, cw);
  BivariatePolynomial::Table table(coeffs.size());
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    for (std::size_t k = 0; k < coeffs[r].size(); ++k)
      table[r].push_back(complex_from_json(coeffs[r][k], at(at(cw, r), k)));
  try {
    return BivariatePolynomial(std::move(table));
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
}

AnyPolynomial polynomial_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (!j.contains("block_size")) return scalar_polynomial_from_json(j, where);

  const int degree = integer(field(j, "degree", where), member(where, "degree"));
  const int block = integer(j["block_size"], member(where, "block_size"));
  if (block < 1) fail(member(where, "block_size"), "must be positive");
  const std::string cw = member(where, "coeffs");
  const json& coeffs = field(j, "coeffs", where);
  check_triangle(coeffs, degree, cw);
  MatrixBivariatePolynomial::Table table(coeffs.size());
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    for (std::size_t k = 0; k < coeffs[r].size(); ++k) {
      const std::string ew = at(at(cw, r), k);
      Matrix m = matrix_from_json(coeffs[r][k], ew);
      if (m.rows() != block || m.cols() != block)
        fail(ew, "expected a " + std::to_string(block) + "x" + std::to_string(block) + " block");
      table[r].push_back(std::move(m));
    }
  }
  try {
    return MatrixBivariatePolynomial(std::move(table));
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
}

json to_json(const Pencil& pencil) {
  return {{"size", pencil.size()},
          {"block_size", pencil.block_size},
          {"A", to_json(pencil.A)},
          {"B", to_json(pencil.B)},
          {"C", to_json(pencil.C)}};
}

Pencil pencil_from_json(const json& j, const std::string& where) {
  const int size = integer(field(j, "size", where), member(where, "size"));
  const int block =
      j.contains("block_size") ? integer(j["block_size"], member(where, "block_size")) : 1;
  Matrix a = matrix_from_json(field(j, "A", where), member(where, "A"));
  Matrix b = matrix_from_json(field(j, "B", where), member(where, "B"));
  Matrix c = matrix_from_json(field(j, "C", where), member(where, "C"));
  if (a.rows() != static_cast<Index>(size) * block)
    fail(where, "matrix dimension does not match size * block_size");
  try {
    return Pencil(std::move(a), std::move(b), std::move(c), block);
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
}

json to_json(const MonomialTree& tree) {
  json nodes = json::array();
  json edges = json::array();
  for (Index i = 0; i < tree.size(); ++i) {
    const Monomial& m = tree.nodes()[static_cast<std::size_t>(i)];
    nodes.push_back({m.j, m.k});
    edges.push_back(i == 0 ? json(nullptr) : json(tree.edge(i) == EdgeVar::X ? "x" : "y"));
  }
  return {{"nodes", std::move(nodes)}, {"parent", tree.parents()}, {"edge", std::move(edges)}};
}

MonomialTree monomial_tree_from_json(const json& j, const std::string& where) {
  const json& nodes = array(field(j, "nodes", where), member(where, "nodes"));
  const json& parents = array(field(j, "parent", where), member(where, "parent"));
  const json& edges = array(field(j, "edge", where), member(where, "edge"));
  if (parents.size() != nodes.size() || edges.size() != nodes.size())
    fail(where, "nodes, parent and edge must have equal length");
  std::vector<Monomial> ms;
  std::vector<int> ps;
  std::vector<EdgeVar> es;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string nw = at(member(where, "nodes"), i);
    if (!nodes[i].is_array() || nodes[i].size() != 2) fail(nw, "expected [j, k]");
    ms.push_back({integer(nodes[i][0], nw), integer(nodes[i][1], nw)});
    ps.push_back(integer(parents[i], at(member(where, "parent"), i)));
    if (i == 0 || edges[i] == "x")
      es.push_back(EdgeVar::X);
    else if (edges[i] == "y")
      es.push_back(EdgeVar::Y);
    else
      fail(at(member(where, "edge"), i), "expected \"x\" or \"y\"");
  }
  try {
    return MonomialTree(std::move(ms), std::move(ps), std::move(es));
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
}

json to_json(const LinearForm& f) { return json::array({to_json(f.a), to_json(f.b), to_json(f.c)}); }

LinearForm linear_form_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) fail(where, "expected [a, b, c]");
  return {complex_from_json(j[0], at(where, 0)), complex_from_json(j[1], at(where, 1)),
          complex_from_json(j[2], at(where, 2))};
}

json to_json(const RepresentationTree& tree) {
  json nodes = json::array();
  for (Index i = 0; i < tree.size(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    json node = {{"parent", tree.parent[k]}, {"coeff", to_json(tree.coeff[k])}};
    node["edge"] = i == 0 ? json(nullptr) : to_json(tree.edge[k]);
    nodes.push_back(std::move(node));
  }
  return {{"nodes", std::move(nodes)}};
}

RepresentationTree representation_tree_from_json(const json& j, const std::string& where) {
  const std::string nw = member(where, "nodes");
  const json& nodes = array(field(j, "nodes", where), nw);
  RepresentationTree tree;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string w = at(nw, i);
    const int parent = integer(field(nodes[i], "parent", w), member(w, "parent"));
    if (i == 0 ? parent != -1 : (parent < 0 || parent >= static_cast<int>(i)))
      fail(member(w, "parent"), "parent must precede its child (root has -1)");
    tree.parent.push_back(parent);
    tree.coeff.push_back(linear_form_from_json(field(nodes[i], "coeff", w), member(w, "coeff")));
    tree.edge.push_back(i == 0 ? LinearForm{}
                               : linear_form_from_json(field(nodes[i], "edge", w), member(w, "edge")));
  }
  if (tree.parent.empty()) fail(nw, "tree has no nodes");
  return tree;
}

json to_json(const AffineSubstitution& s) {
  return {{"linear", to_json(Matrix(s.linear))}, {"shift", json::array({to_json(s.shift(0)), to_json(s.shift(1))})}};
}

json to_json(const SubstitutionRecord& r) {
  json out = to_json(r.map);
  out["kind"] = r.kind;
  out["level"] = r.level;
  return out;
}

json to_json(const RootRecord& r) {
  return {{"x", to_json(r.x)},
          {"y", to_json(r.y)},
          {"residual", finite_or_null(r.residual)},
          {"condition", finite_or_null(r.condition)},
          {"accuracy", finite_or_null(r.accuracy)},
          {"multiplicity", r.multiplicity}};
}

RootRecord root_from_json(const json& j, const std::string& where) {
  RootRecord r;
  r.x = complex_from_json(field(j, "x", where), member(where, "x"));
  r.y = complex_from_json(field(j, "y", where), member(where, "y"));
  r.residual = real_or_inf(field(j, "residual", where), member(where, "residual"));
  r.condition = real_or_inf(field(j, "condition", where), member(where, "condition"));
  r.accuracy = real_or_inf(field(j, "accuracy", where), member(where, "accuracy"));
  r.multiplicity = j.contains("multiplicity")
                       ? integer(j["multiplicity"], member(where, "multiplicity"))
                       : 1;
  return r;
}

json roots_to_json(const std::vector<RootRecord>& roots) {
  json out = json::array();
  for (const RootRecord& r : roots) out.push_back(to_json(r));
  return out;
}

std::vector<RootRecord> roots_from_json(const json& j) {
  array(j, "roots");
  std::vector<RootRecord> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(root_from_json(j[i], at("roots", i)));
  return out;
}

json to_json(const DeltaTriple& d) {
  return {{"delta0", to_json(d.d0)}, {"delta1", to_json(d.d1)}, {"delta2", to_json(d.d2)}};
}

namespace {

Linearization linearization_from_string(const std::string& s, const std::string& where) {
  if (s == "lin1") return Linearization::Lin1;
  if (s == "lin2") return Linearization::Lin2;
  if (s == "auto") return Linearization::Auto;
  fail(where, "expected \"lin1\", \"lin2\" or \"auto\"");
}

const char* to_string(Linearization l) {
  switch (l) {
    case Linearization::Lin1: return "lin1";
    case Linearization::Lin2: return "lin2";
    case Linearization::Auto: break;
  }
  return "auto";
}

}  // namespace

SystemFile system_from_json(const json& j) {
  SystemFile s;
  s.p = scalar_polynomial_from_json(field(j, "p", "system"), "system.p");
  s.q = scalar_polynomial_from_json(field(j, "q", "system"), "system.q");
  if (!j.contains("options")) return s;

  const json& o = j["options"];
  const std::string w = "system.options";
  if (!o.is_object()) fail(w, "expected an object");
  if (o.contains("linearization")) {
    if (!o["linearization"].is_string()) fail(member(w, "linearization"), "expected a string");
    s.options.linearization =
        linearization_from_string(o["linearization"].get<std::string>(), member(w, "linearization"));
  }
  if (o.contains("newton_steps"))
    s.options.newton_steps = integer(o["newton_steps"], member(w, "newton_steps"));
  if (o.contains("rank_tol")) s.options.rank_tol = real(o["rank_tol"], member(w, "rank_tol"));
  if (o.contains("cluster_tol"))
    s.options.cluster_tol = real(o["cluster_tol"], member(w, "cluster_tol"));
  if (o.contains("residual_accept"))
    s.options.residual_accept = real(o["residual_accept"], member(w, "residual_accept"));
  if (o.contains("swap_variables")) {
    if (!o["swap_variables"].is_boolean()) fail(member(w, "swap_variables"), "expected a boolean");
    s.options.swap_variables = o["swap_variables"].get<bool>();
  }
  return s;
}

json to_json(const SystemFile& s) {
  json o = {{"linearization", to_string(s.options.linearization)},
            {"newton_steps", s.options.newton_steps},
            {"cluster_tol", s.options.cluster_tol},
            {"residual_accept", s.options.residual_accept},
            {"swap_variables", s.options.swap_variables}};
  if (s.options.rank_tol) o["rank_tol"] = *s.options.rank_tol;
  return {{"p", to_json(s.p)}, {"q", to_json(s.q)}, {"options", std::move(o)}};
}

}  // namespace detrep::cli
