#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/cfg/helpers.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "commands.hpp"

using namespace detrep::cli;

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("detrep"));
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("DETREP_LOG")) spdlog::cfg::helpers::load_levels(level);

  CLI::App app{"Determinantal representations and bivariate polynomial systems"};
  app.require_subcommand(1);

  LinearizeArgs lin;
  auto* lin_cmd = app.add_subcommand("linearize", "Write a pencil A + xB + yC with det = p");
  lin_cmd->add_option("input", lin.input, "Polynomial JSON file")->required()->check(CLI::ExistingFile);
  lin_cmd->add_option("--method", lin.method, "tree (monomial tree) or alg2 (recursive tree)")
      ->check(CLI::IsMember({"tree", "alg2"}));
  lin_cmd->add_option("-o,--output", lin.output, "Output file (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Roots of the system p = q = 0");
  solve_cmd->add_option("input", solve.input, "System JSON file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--linearization", solve.linearization, "lin1, lin2 or auto")
      ->check(CLI::IsMember({"lin1", "lin2", "auto"}));
  solve_cmd->add_option("--rank-tol", solve.rank_tol, "Relative rank tolerance of the staircase");
  solve_cmd->add_option("--cluster-tol", solve.cluster_tol, "Eigenvalue clustering tolerance");
  solve_cmd->add_option("--newton-steps", solve.newton_steps, "Newton refinement steps")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--residual-accept", solve.residual_accept,
                        "Largest accepted relative residual");
  solve_cmd->add_flag("--swap-xy", solve.swap_xy, "Interchange x and y before solving");
  solve_cmd->add_option("--dump-deltas", solve.dump_deltas, "Write the operator determinants here");
  solve_cmd->add_option("-o,--output", solve.output, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check det(A + xB + yC) against p");
  verify_cmd->add_option("pencil", verify.pencil, "Pencil JSON file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("polynomial", verify.polynomial, "Polynomial JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--samples", verify.samples, "Number of random points")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed");
  verify_cmd->add_option("--tolerance", verify.tolerance, "Largest accepted relative error");

  BenchArgs bench;
  std::string degrees = "3..10";
  auto* bench_cmd = app.add_subcommand("bench", "Pencil sizes, root counts and timings by degree");
  bench_cmd->add_option("--degrees", degrees, "Degree range a..b with 3 <= a <= b <= 12");
  bench_cmd->add_option("--seed", bench.seed, "Seed of the random systems");
  bench_cmd->add_option("--jobs", bench.jobs, "Degrees processed in parallel")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--sizes-only", bench.sizes_only, "Skip solving; print the size columns");
  bench_cmd->add_option("-o,--output", bench.output, "Also write the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kFailure;
  }

  try {
    if (*lin_cmd) return cmd_linearize(lin, std::cout);
    if (*solve_cmd) return cmd_solve(solve, std::cout);
    if (*verify_cmd) return cmd_verify(verify, std::cout);
    std::tie(bench.first, bench.last) = parse_degree_range(degrees);
    return cmd_bench(bench, std::cout);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
}
