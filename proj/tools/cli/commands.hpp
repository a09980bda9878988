#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "detrep/detrep.hpp"

namespace detrep::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kPartial = 2 };

struct LinearizeArgs {
  std::string input;
  std::string method = "tree";   // "tree" (Lin1) or "alg2" (Lin2)
  std::string output;            // stdout when empty
};

struct SolveArgs {
  std::string input;
  std::string output;
  std::string dump_deltas;
  std::optional<std::string> linearization;
  std::optional<double> rank_tol;
  std::optional<double> cluster_tol;
  std::optional<int> newton_steps;
  std::optional<double> residual_accept;
  bool swap_xy = false;
};

struct VerifyArgs {
  std::string pencil;
  std::string polynomial;
  int samples = 20;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
};

struct BenchArgs {
  int first = 3;
  int last = 10;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool sizes_only = false;
  std::string output;   // JSON copy of the table
};

/// One row of the benchmark table.
struct BenchRow {
  int degree = 0;
  Index lin1_size = 0;
  Index lin2_size = 0;
  Index lin1_delta = 0;
  Index lin2_delta = 0;
  int lin1_roots = -1;   // -1: not solved
  int lin2_roots = -1;
  double lin1_accuracy = 0.0;
  double lin2_accuracy = 0.0;
  double lin1_seconds = 0.0;
  double lin2_seconds = 0.0;
};

/// Dense system with real coefficients uniform on [0, 1]; the same
/// (degree, seed) always gives the same system.
std::pair<BivariatePolynomial, BivariatePolynomial> random_system(int degree, std::uint64_t seed);

BenchRow bench_degree(int degree, std::uint64_t seed, bool sizes_only);

int cmd_linearize(const LinearizeArgs& args, std::ostream& out);
int cmd_solve(const SolveArgs& args, std::ostream& out);
int cmd_verify(const VerifyArgs& args, std::ostream& out);
int cmd_bench(const BenchArgs& args, std::ostream& out);

/// Parses "a..b" into (a, b); throws InvalidInput.
std::pair<int, int> parse_degree_range(const std::string& text);

}  // namespace detrep::cli
