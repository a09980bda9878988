#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <string_view>
#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "json_io.hpp"

namespace detrep::cli {

namespace {

void emit(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << dump(doc);
  else
    write_json(doc, path);
}

Linearization parse_linearization(const std::string& s) {
  if (s == "lin1") return Linearization::Lin1;
  if (s == "lin2") return Linearization::Lin2;
  if (s == "auto") return Linearization::Auto;
  throw InvalidInput("unknown linearization '" + s + "' (lin1, lin2, auto)");
}

// Uniform on the closed unit disk.
Complex disk_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, t);
}

json linearize_scalar(const BivariatePolynomial& p, const std::string& method) {
  if (method == "tree") {
    const MonomialTree tree = sparse_tree_heuristic(p);
    json doc = to_json(assemble_pencil(p, tree));
    doc["method"] = "tree";
    doc["tree"] = to_json(tree);
    return doc;
  }
  const Lin2Result r = linearize(p);
  json doc = to_json(r.pencil);
  doc["method"] = "alg2";
  doc["tree"] = to_json(r.tree);
  json subs = json::array();
  for (const SubstitutionRecord& s : r.substitutions) subs.push_back(to_json(s));
  doc["substitutions"] = std::move(subs);
  return doc;
}

}  // namespace

int cmd_linearize(const LinearizeArgs& args, std::ostream& out) {
  if (args.method != "tree" && args.method != "alg2")
    throw InvalidInput("unknown method '" + args.method + "' (tree, alg2)");
  const AnyPolynomial poly = polynomial_from_json(load_json(args.input));

  json doc;
  if (const auto* p = std::get_if<BivariatePolynomial>(&poly)) {
    doc = linearize_scalar(*p, args.method);
  } else {
    const auto& m = std::get<MatrixBivariatePolynomial>(poly);
    if (args.method == "alg2")
      throw Unsupported("method alg2 handles scalar polynomials only; use --method tree");
    const MonomialTree tree = sparse_tree_heuristic(m);
    doc = to_json(assemble_pencil(m, tree));
    doc["method"] = "tree";
    doc["tree"] = to_json(tree);
  }
  spdlog::info("linearize: method {} gives a pencil of size {}", args.method,
               doc["size"].get<int>());
  emit(doc, args.output, out);
  return kOk;
}

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  SystemFile sys = system_from_json(load_json(args.input));
  SolveOptions& o = sys.options;
  if (args.linearization) o.linearization = parse_linearization(*args.linearization);
  if (args.rank_tol) o.rank_tol = args.rank_tol;
  if (args.cluster_tol) o.cluster_tol = *args.cluster_tol;
  if (args.newton_steps) o.newton_steps = *args.newton_steps;
  if (args.residual_accept) o.residual_accept = *args.residual_accept;
  if (args.swap_xy) o.swap_variables = true;

  if (!args.dump_deltas.empty()) {
    const BivariatePolynomial p = o.swap_variables ? sys.p.swapped() : sys.p;
    const BivariatePolynomial q = o.swap_variables ? sys.q.swapped() : sys.q;
    write_json(to_json(operator_determinants(linearize_system(p, q, o.linearization))),
               args.dump_deltas);
  }

  const SolveReport report = solve_system_report(sys.p, sys.q, o);
  int count = 0;
  for (const RootRecord& r : report.roots) count += r.multiplicity;
  spdlog::info("solve: pencils {} and {}, delta size {} (regular part {}{}), {} roots",
               report.pencil_size_p, report.pencil_size_q, report.delta_size,
               report.regular_size, report.singular ? ", singular" : "", count);
  for (const RootRecord& r : report.rejected)
    spdlog::debug("rejected candidate |x| {:.3e} |y| {:.3e} residual {:.3e}", std::abs(r.x),
                  std::abs(r.y), r.residual);
  for (const std::string& w : report.warnings) spdlog::warn("{}", w);

  emit(roots_to_json(report.roots), args.output, out);
  return report.warnings.empty() ? kOk : kPartial;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (args.samples < 1) throw InvalidInput("--samples must be positive");
  const Pencil pencil = pencil_from_json(load_json(args.pencil));
  const AnyPolynomial poly = polynomial_from_json(load_json(args.polynomial));

  const Index block = std::holds_alternative<BivariatePolynomial>(poly)
                          ? 1
                          : std::get<MatrixBivariatePolynomial>(poly).block_size();
  if (pencil.block_size != block)
    throw InvalidInput("pencil block size " + std::to_string(pencil.block_size) +
                       " does not match polynomial block size " + std::to_string(block));

  std::mt19937_64 rng(args.seed);
  double worst = 0.0;
  for (int i = 0; i < args.samples; ++i) {
    const Complex x = disk_point(rng);
    const Complex y = disk_point(rng);
    const double err = std::visit(
        [&](const auto& p) { return det_identity_error(pencil, p, x, y); }, poly);
    worst = std::max(worst, err);
  }
  const bool pass = worst <= args.tolerance;
  out << fmt::format("samples {}  max relative error {:.3e}  tolerance {:.1e}  {}\n", args.samples,
                     worst, args.tolerance, pass ? "PASS" : "FAIL");
  return pass ? kOk : kFailure;
}

std::pair<BivariatePolynomial, BivariatePolynomial> random_system(int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(degree));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto draw = [&] {
    BivariatePolynomial::Table t = BivariatePolynomial::empty_table(degree);
    for (auto& row : t)
      for (Complex& c : row) c = u(rng);
    return BivariatePolynomial(std::move(t));
  };
  BivariatePolynomial p = draw();
  BivariatePolynomial q = draw();
  return {std::move(p), std::move(q)};
}

BenchRow bench_degree(int degree, std::uint64_t seed, bool sizes_only) {
  const auto [p, q] = random_system(degree, seed);
  BenchRow row;
  row.degree = degree;

  const TwoParameterProblem l1 = linearize_system(p, q, Linearization::Lin1);
  const TwoParameterProblem l2 = linearize_system(p, q, Linearization::Lin2);
  row.lin1_size = l1.first.size();
  row.lin2_size = l2.first.size();
  row.lin1_delta = l1.first.size() * l1.second.size();
  row.lin2_delta = l2.first.size() * l2.second.size();
  if (sizes_only) return row;

  auto run = [&](Linearization method, int& roots, double& accuracy, double& seconds) {
    SolveOptions o;
    o.linearization = method;
    const auto start = std::chrono::steady_clock::now();
    try {
      const std::vector<RootRecord> found = solve_system(p, q, o);
      roots = 0;
      for (const RootRecord& r : found) {
        roots += r.multiplicity;
        accuracy = std::max(accuracy, r.accuracy);
      }
    } catch (const Error& e) {
      spdlog::error("degree {}: {}", degree, e.what());
      roots = 0;
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  run(Linearization::Lin1, row.lin1_roots, row.lin1_accuracy, row.lin1_seconds);
  run(Linearization::Lin2, row.lin2_roots, row.lin2_accuracy, row.lin2_seconds);
  return row;
}

std::pair<int, int> parse_degree_range(const std::string& text) {
  auto whole = [&](std::string_view part, int& v) {
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    return ec == std::errc{} && end == part.data() + part.size() && !part.empty();
  };
  const std::string_view sv(text);
  const auto dots = sv.find("..");
  int a = 0;
  int b = 0;
  const bool ok = dots == std::string_view::npos
                      ? whole(sv, a) && whole(sv, b)
                      : whole(sv.substr(0, dots), a) && whole(sv.substr(dots + 2), b);
  if (!ok) throw InvalidInput("--degrees expects a..b, got '" + text + "'");
  if (a < 3 || b > 12 || a > b) throw InvalidInput("--degrees needs 3 <= a <= b <= 12");
  return {a, b};
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  if (args.first < 3 || args.last > 12 || args.first > args.last)
    throw InvalidInput("--degrees needs 3 <= a <= b <= 12");
  const int count = args.last - args.first + 1;
  std::vector<BenchRow> rows(static_cast<std::size_t>(count));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++)
      rows[static_cast<std::size_t>(i)] = bench_degree(args.first + i, args.seed, args.sizes_only);
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < std::clamp(args.jobs, 1, count); ++t) pool.emplace_back(worker);
    worker();
  }

  out << fmt::format("{:>3} {:>6} {:>6} {:>8} {:>8} {:>7} {:>7} {:>10} {:>10} {:>9} {:>9}\n", "n",
                     "lin1", "lin2", "delta1", "delta2", "roots1", "roots2", "acc1", "acc2",
                     "t1 [s]", "t2 [s]");
  json table = json::array();
  for (const BenchRow& r : rows) {
    auto count_str = [](int c) { return c < 0 ? std::string("-") : std::to_string(c); };
    auto acc_str = [&](int c, double a) { return c < 0 ? std::string("-") : fmt::format("{:.2e}", a); };
    auto t_str = [&](int c, double t) { return c < 0 ? std::string("-") : fmt::format("{:.3f}", t); };
    out << fmt::format("{:>3} {:>6} {:>6} {:>8} {:>8} {:>7} {:>7} {:>10} {:>10} {:>9} {:>9}\n",
                       r.degree, r.lin1_size, r.lin2_size, r.lin1_delta, r.lin2_delta,
                       count_str(r.lin1_roots), count_str(r.lin2_roots),
                       acc_str(r.lin1_roots, r.lin1_accuracy), acc_str(r.lin2_roots, r.lin2_accuracy),
                       t_str(r.lin1_roots, r.lin1_seconds), t_str(r.lin2_roots, r.lin2_seconds));
    json j = {{"degree", r.degree},         {"lin1_size", r.lin1_size},
              {"lin2_size", r.lin2_size},   {"lin1_delta", r.lin1_delta},
              {"lin2_delta", r.lin2_delta}};
    if (!args.sizes_only) {
      j["lin1_roots"] = r.lin1_roots;
      j["lin2_roots"] = r.lin2_roots;
      j["lin1_max_accuracy"] = r.lin1_accuracy;
      j["lin2_max_accuracy"] = r.lin2_accuracy;
      j["lin1_seconds"] = r.lin1_seconds;
      j["lin2_seconds"] = r.lin2_seconds;
    }
    table.push_back(std::move(j));
  }
  if (!args.output.empty()) write_json(table, args.output);
  return kOk;
}

}  // namespace detrep::cli
