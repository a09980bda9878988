#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json_io.hpp"
#include "oracles.hpp"

using namespace detrep;
using namespace detrep::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures{DETREP_FIXTURES};

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("detrep_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + name);
}

}  // namespace

TEST(Json, ComplexForms) {
  EXPECT_EQ(complex_from_json(json(2.5), "z"), Complex(2.5));
  EXPECT_EQ(complex_from_json(json::array({1.0, -2.0}), "z"), Complex(1.0, -2.0));
  EXPECT_THROW(complex_from_json(json("x"), "z"), ParseError);
  EXPECT_THROW(complex_from_json(json::array({1.0, 2.0, 3.0}), "z"), ParseError);
  const Complex w{0.1, 1.0 / 3.0};
  EXPECT_EQ(complex_from_json(to_json(w), "w"), w);
}

TEST(Json, PolynomialRoundTrip) {
  std::mt19937_64 rng(501);
  const auto p = oracle::random_polynomial(rng, 5, true);
  const auto back = scalar_polynomial_from_json(json::parse(dump(to_json(p))));
  EXPECT_TRUE(back == p);

  const auto m = oracle::random_matrix_polynomial(rng, 3, 2);
  const auto any = polynomial_from_json(to_json(m));
  ASSERT_TRUE(std::holds_alternative<MatrixBivariatePolynomial>(any));
  const auto& mb = std::get<MatrixBivariatePolynomial>(any);
  EXPECT_EQ(mb.block_size(), 2);
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; j + k <= 3; ++k) EXPECT_EQ((mb.coeff(j, k) - m.coeff(j, k)).norm(), 0.0);
}

TEST(Json, PolynomialErrorsNameTheField) {
  const json bad = json::parse(R"({"degree": 2, "coeffs": [[1, 2, 3], [4], [5]]})");
  try {
    scalar_polynomial_from_json(bad, "p");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("p.coeffs[1]"), std::string::npos) << e.what();
  }
}

TEST(Json, PencilAndTreeRoundTrip) {
  const auto p = BivariatePolynomial({{1, 3, 6, 10}, {2, 5, 9}, {4, 8}, {7}});
  const MonomialTree tree = sparse_tree_heuristic(p);
  const Pencil pencil = assemble_pencil(p, tree);
  const Pencil back = pencil_from_json(json::parse(dump(to_json(pencil))));
  EXPECT_EQ((back.A - pencil.A).norm(), 0.0);
  EXPECT_EQ((back.B - pencil.B).norm(), 0.0);
  EXPECT_EQ((back.C - pencil.C).norm(), 0.0);
  EXPECT_EQ(back.block_size, 1);

  const MonomialTree t2 = monomial_tree_from_json(to_json(tree));
  EXPECT_EQ(t2.size(), tree.size());
  EXPECT_EQ(t2.nodes(), tree.nodes());
}

TEST(Json, RootsWithInfinity) {
  RootRecord r;
  r.x = {1, 2};
  r.y = {-0.5, 0};
  r.residual = 1e-15;
  r.condition = std::numeric_limits<double>::infinity();
  r.accuracy = std::numeric_limits<double>::infinity();
  r.multiplicity = 2;
  const json j = roots_to_json({r});
  EXPECT_TRUE(j[0]["condition"].is_null());
  const auto back = roots_from_json(json::parse(dump(j)));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].x, r.x);
  EXPECT_EQ(back[0].y, r.y);
  EXPECT_TRUE(std::isinf(back[0].condition));
  EXPECT_EQ(back[0].multiplicity, 2);
}

TEST(Json, SystemOptions) {
  const json j = json::parse(R"({
    "p": {"degree": 1, "coeffs": [[-1, 1], [1]]},
    "q": {"degree": 1, "coeffs": [[0, -1], [1]]},
    "options": {"linearization": "lin1", "newton_steps": 4, "rank_tol": 1e-9}
  })");
  const SystemFile s = system_from_json(j);
  EXPECT_EQ(s.options.linearization, Linearization::Lin1);
  EXPECT_EQ(s.options.newton_steps, 4);
  ASSERT_TRUE(s.options.rank_tol.has_value());
  EXPECT_EQ(*s.options.rank_tol, 1e-9);
  const SystemFile again = system_from_json(to_json(s));
  EXPECT_TRUE(again.p == s.p);
  EXPECT_EQ(again.options.newton_steps, 4);

  json bad = j;
  bad["options"]["linearization"] = "lin3";
  EXPECT_THROW(system_from_json(bad), ParseError);
}

TEST(Json, LoadReportsLineAndColumn) {
  const fs::path path = temp_file("broken.json");
  {
    std::ofstream out(path);
    out << "{\n  \"p\": [1,\n}\n";
  }
  try {
    load_json(path);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(path.string() + ":3:"), std::string::npos) << e.what();
  }
  fs::remove(path);
  EXPECT_THROW(load_json(kFixtures / "does_not_exist.json"), ParseError);
}

TEST(Commands, SolveFixture) {
  const fs::path out = temp_file("roots.json");
  const fs::path deltas = temp_file("deltas.json");
  SolveArgs args;
  args.input = (kFixtures / "cubic_pair.json").string();
  args.output = out.string();
  args.dump_deltas = deltas.string();
  std::ostringstream log;
  EXPECT_EQ(cmd_solve(args, log), kOk);
  const auto roots = roots_from_json(load_json(out));
  EXPECT_EQ(roots.size(), 9u);
  const json d = load_json(deltas);
  EXPECT_TRUE(d.contains("delta0"));
  fs::remove(out);
  fs::remove(deltas);
}

TEST(Commands, LinearizeThenVerify) {
  const fs::path pencil = temp_file("pencil.json");
  std::ostringstream sink;
  for (const std::string method : {"tree", "alg2"}) {
    LinearizeArgs la;
    la.input = (kFixtures / "cubic.json").string();
    la.method = method;
    la.output = pencil.string();
    ASSERT_EQ(cmd_linearize(la, sink), kOk) << method;
    VerifyArgs va;
    va.pencil = pencil.string();
    va.polynomial = la.input;
    std::ostringstream report;
    EXPECT_EQ(cmd_verify(va, report), kOk) << method;
    EXPECT_NE(report.str().find("PASS"), std::string::npos);
  }
  fs::remove(pencil);

  VerifyArgs bad;
  bad.pencil = (kFixtures / "cubic_pencil_perturbed.json").string();
  bad.polynomial = (kFixtures / "cubic.json").string();
  std::ostringstream report;
  EXPECT_EQ(cmd_verify(bad, report), kFailure);
  EXPECT_NE(report.str().find("FAIL"), std::string::npos);
}

TEST(Commands, BenchSizes) {
  BenchArgs args;
  args.first = 3;
  args.last = 4;
  args.sizes_only = true;
  std::ostringstream out;
  EXPECT_EQ(cmd_bench(args, out), kOk);
  const BenchRow row = bench_degree(4, 1, true);
  EXPECT_EQ(row.lin1_size, 8);
  EXPECT_EQ(row.lin2_size, 5);
  EXPECT_EQ(row.lin1_delta, 64);
  EXPECT_EQ(row.lin2_delta, 25);
  EXPECT_EQ(row.lin1_roots, -1);
}

TEST(Commands, RandomSystemIsDeterministic) {
  const auto [p1, q1] = random_system(5, 7);
  const auto [p2, q2] = random_system(5, 7);
  EXPECT_TRUE(p1 == p2);
  EXPECT_TRUE(q1 == q2);
  EXPECT_TRUE(p1.is_real());
  EXPECT_FALSE(p1 == random_system(5, 8).first);
}

TEST(Commands, DegreeRange) {
  EXPECT_EQ(parse_degree_range("3..10"), std::make_pair(3, 10));
  EXPECT_EQ(parse_degree_range("5..5"), std::make_pair(5, 5));
  EXPECT_THROW(parse_degree_range("2..5"), InvalidInput);
  EXPECT_THROW(parse_degree_range("6..4"), InvalidInput);
  EXPECT_THROW(parse_degree_range("3-10"), InvalidInput);
  EXPECT_THROW(parse_degree_range("3..13"), InvalidInput);
}
