#include "detrep/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/SVD>

#include "detrep/lin1.hpp"
#include "detrep/lin2.hpp"
#include "detrep/univariate.hpp"

namespace detrep {
namespace {

struct System {
  const BivariatePolynomial& p;
  const BivariatePolynomial& q;
  BivariatePolynomial px, py, qx, qy;

  System(const BivariatePolynomial& p_, const BivariatePolynomial& q_) : p(p_), q(q_) {
    std::tie(px, py) = partial_derivatives(p);
    std::tie(qx, qy) = partial_derivatives(q);
  }

  Eigen::Matrix2cd jacobian(Complex x, Complex y) const {
    Eigen::Matrix2cd j;
    j << evaluate(px, x, y), evaluate(py, x, y), evaluate(qx, x, y), evaluate(qy, x, y);
    return j;
  }

  double residual(Complex x, Complex y) const {
    return std::max(std::abs(evaluate(p, x, y)), std::abs(evaluate(q, x, y)));
  }
};

double inverse_norm(const Eigen::Matrix2cd& j) {
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(j);
  const double smin = svd.singularValues()(1);
  if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
  return 1.0 / smin;
}

NewtonResult newton(const System& s, Complex x, Complex y, int steps) {
  NewtonResult r{x, y, true, 0};
  for (int it = 0; it < steps; ++it) {
    const Eigen::Matrix2cd j = s.jacobian(r.x, r.y);
    const Complex det = j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0);
    const double scale = j.squaredNorm();
    if (!(std::abs(det) > 1e-15 * scale)) {
      r.refined = false;
      break;
    }
    const Complex f = evaluate(s.p, r.x, r.y);
    const Complex g = evaluate(s.q, r.x, r.y);
    if (f == Complex{0.0} && g == Complex{0.0}) break;
    const Complex dx = (j(1, 1) * f - j(0, 1) * g) / det;
    const Complex dy = (j(0, 0) * g - j(1, 0) * f) / det;
    r.x -= dx;
    r.y -= dy;
    ++r.iterations;
  }
  return r;
}

// Coefficients of p(x0, t) (or p(t, y0) when `fix_x` is false), trailing
// negligible coefficients removed.
std::vector<Complex> restricted(const BivariatePolynomial& p, Complex v, bool fix_x) {
  const int n = p.degree();
  std::vector<Complex> c(static_cast<std::size_t>(n + 1), Complex{0.0});
  for (int j = 0; j <= n; ++j)
    for (int k = 0; j + k <= n; ++k) {
      const Complex a = p.coeff(j, k);
      if (fix_x)
        c[static_cast<std::size_t>(k)] += a * std::pow(v, j);
      else
        c[static_cast<std::size_t>(j)] += a * std::pow(v, k);
    }
  double big = 0.0;
  for (const Complex& z : c) big = std::max(big, std::abs(z));
  while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * big) c.pop_back();
  return c;
}

// |p| evaluated with absolute coefficients, the scale of rounding in p(x, y).
double abs_value(const BivariatePolynomial& p, Complex x, Complex y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  double s = 0.0;
  for (int j = 0; j <= p.degree(); ++j)
    for (int k = 0; j + k <= p.degree(); ++k)
      s += std::abs(p.coeff(j, k)) * std::pow(ax, j) * std::pow(ay, k);
  return s;
}

// True when, at the sample value, some root of p's restriction is a root of q.
bool shares_root(const BivariatePolynomial& p, const BivariatePolynomial& q, Complex v, bool fix_x) {
  const std::vector<Complex> c = restricted(p, v, fix_x);
  if (c.size() <= 1) return false;
  for (const Complex& t : univariate_roots(c)) {
    const Complex x = fix_x ? v : t;
    const Complex y = fix_x ? t : v;
    const double scale = abs_value(q, x, y);
    if (scale > 0 && std::abs(evaluate(q, x, y)) <= 1e-7 * scale) return true;
  }
  return false;
}

std::vector<RootRecord> deduplicate(std::vector<RootRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const RootRecord& a, const RootRecord& b) { return a.accuracy < b.accuracy; });
  std::vector<RootRecord> kept;
  for (const RootRecord& r : records) {
    auto near = std::find_if(kept.begin(), kept.end(), [&](const RootRecord& k) {
      return std::max(std::abs(k.x - r.x), std::abs(k.y - r.y)) <= 1e-8;
    });
    if (near != kept.end())
      ++near->multiplicity;
    else
      kept.push_back(r);
  }
  return kept;
}

int root_count(const SolveReport& r) {
  int total = 0;
  for (const RootRecord& root : r.roots) total += root.multiplicity;
  return total;
}

// One eigenvalue solve of an already linearized system; p and q are in the
// solved (possibly swapped) variables, records are reported in the original.
SolveReport run(const BivariatePolynomial& p, const BivariatePolynomial& q,
                const TwoParameterProblem& problem, const SolveOptions& options, bool swap,
                std::optional<double> rank_tol) {
  SolveReport report;
  report.swapped = swap;
  report.pencil_size_p = problem.first.size();
  report.pencil_size_q = problem.second.size();

  TwoParOptions tp;
  tp.rank_tol = rank_tol;
  tp.cluster_tol = options.cluster_tol;
  TwoParResult eig = solve(problem, tp);
  report.rank_tol = rank_tol.value_or(0.0);
  report.delta_size = eig.delta_size;
  report.regular_size = eig.regular_size;
  report.singular = eig.singular;
  report.warnings = std::move(eig.warnings);

  const System sys(p, q);
  std::vector<RootRecord> accepted;
  for (const EigenSolution& sol : eig.solutions) {
    RootRecord rec;
    rec.x = sol.x;
    rec.y = sol.y;
    // A Newton correction larger than this means the eigenvalue was not an
    // approximation of the root it converged to.
    bool stayed = true;
    if (std::isfinite(std::abs(sol.x)) && std::isfinite(std::abs(sol.y))) {
      const NewtonResult nr = newton(sys, sol.x, sol.y, options.newton_steps);
      const double scale = std::max({1.0, std::abs(sol.x), std::abs(sol.y)});
      stayed = std::max(std::abs(nr.x - sol.x), std::abs(nr.y - sol.y)) <= 0.1 * scale;
      rec.x = nr.x;
      rec.y = nr.y;
      rec.refined = nr.refined;
    }
    rec.residual = sys.residual(rec.x, rec.y);
    rec.backward_error = backward_error(p, q, rec.x, rec.y);
    rec.condition = inverse_norm(sys.jacobian(rec.x, rec.y));
    rec.accuracy = rec.residual == 0.0 ? 0.0 : rec.residual * rec.condition;
    if (swap) std::swap(rec.x, rec.y);
    if (stayed && rec.backward_error <= options.residual_accept)
      accepted.push_back(rec);
    else
      report.rejected.push_back(rec);
  }
  report.roots = deduplicate(std::move(accepted));

  const int total = root_count(report);
  if (total > p.degree() * q.degree())
    report.warnings.push_back("more accepted roots (" + std::to_string(total) +
                              ") than the Bezout bound");
  return report;
}

// Better of two attempts: more roots up to the Bezout bound, then fewer
// warnings.
bool better(const SolveReport& a, const SolveReport& b, int bezout) {
  const int ca = root_count(a);
  const int cb = root_count(b);
  const bool va = ca <= bezout;
  const bool vb = cb <= bezout;
  if (va != vb) return va;
  if (ca != cb) return va ? ca > cb : ca < cb;
  return a.warnings.size() < b.warnings.size();
}

std::optional<SolveReport> attempt(const BivariatePolynomial& p0, const BivariatePolynomial& q0,
                                   const SolveOptions& options, bool swap,
                                   std::vector<std::string>& log) {
  const BivariatePolynomial p = swap ? p0.swapped() : p0;
  const BivariatePolynomial q = swap ? q0.swapped() : q0;
  const TwoParameterProblem problem = linearize_system(p, q, options.linearization);
  const int bezout = p.degree() * q.degree();

  std::vector<std::optional<double>> tolerances;
  if (options.rank_tol)
    tolerances.push_back(options.rank_tol);
  else
    for (double t : kRankTolLadder) tolerances.push_back(t);

  std::optional<SolveReport> best;
  for (const std::optional<double>& tol : tolerances) {
    try {
      SolveReport r = run(p, q, problem, options, swap, tol);
      const bool done = root_count(r) == bezout;
      if (!best || better(r, *best, bezout)) best = std::move(r);
      if (done) break;
      log.push_back("rank tolerance " + std::to_string(tol.value_or(0.0)) + " gave " +
                    std::to_string(root_count(*best)) + " of " + std::to_string(bezout) +
                    " roots");
    } catch (const SingularProblem& e) {
      log.push_back(e.what());
    } catch (const ConvergenceFailure& e) {
      log.push_back(e.what());
    }
  }
  return best;
}

}  // namespace

TwoParameterProblem linearize_system(const BivariatePolynomial& p, const BivariatePolynomial& q,
                                     Linearization method) {
  auto one = [method](const BivariatePolynomial& f) {
    if (method == Linearization::Lin1) return assemble_pencil(f, sparse_tree_heuristic(f));
    return linearize(f).pencil;
  };
  return {one(p), one(q)};
}

void check_zero_dimensional(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  static const Complex samples[2] = {{0.6180339887, 0.2718281828}, {-0.4142135624, 0.7320508076}};
  for (bool fix_x : {true, false}) {
    if (shares_root(p, q, samples[0], fix_x) && shares_root(p, q, samples[1], fix_x))
      throw DegenerateSystem(
          "p and q appear to share a common factor; the system has infinitely many solutions");
  }
}

SolveReport solve_system_report(const BivariatePolynomial& p, const BivariatePolynomial& q,
                                const SolveOptions& options) {
  if (p.is_zero() || q.is_zero() || p.degree() < 1 || q.degree() < 1)
    throw InvalidInput("solve_system needs two polynomials of degree at least 1");
  if (options.newton_steps < 0) throw InvalidInput("newton_steps must be non-negative");
  check_zero_dimensional(p, q);

  std::vector<std::string> log;
  std::optional<SolveReport> report = attempt(p, q, options, options.swap_variables, log);
  if ((!report || report->roots.empty()) && options.swap_retry) {
    log.push_back("no root accepted; retrying with x and y swapped");
    std::optional<SolveReport> retry = attempt(p, q, options, !options.swap_variables, log);
    if (retry && (!report || !retry->roots.empty())) report = std::move(retry);
  }
  if (!report) throw SingularProblem("no rank tolerance isolated a regular part: " + log.back());
  report->warnings.insert(report->warnings.begin(), log.begin(), log.end());
  return std::move(*report);
}

std::vector<RootRecord> solve_system(const BivariatePolynomial& p, const BivariatePolynomial& q,
                                     const SolveOptions& options) {
  return solve_system_report(p, q, options).roots;
}

NewtonResult newton_refine(const BivariatePolynomial& p, const BivariatePolynomial& q, Complex x0,
                           Complex y0, int steps) {
  if (steps < 0) throw InvalidInput("steps must be non-negative");
  return newton(System(p, q), x0, y0, steps);
}

double inverse_jacobian_norm(const BivariatePolynomial& p, const BivariatePolynomial& q, Complex x0,
                             Complex y0) {
  return inverse_norm(System(p, q).jacobian(x0, y0));
}

double backward_error(const BivariatePolynomial& p, const BivariatePolynomial& q, Complex x,
                      Complex y) {
  auto rel = [&](const BivariatePolynomial& f) {
    const double scale = abs_value(f, x, y);
    const double value = std::abs(evaluate(f, x, y));
    return scale > 0.0 ? value / scale : value;
  };
  return std::max(rel(p), rel(q));
}

double accuracy_measure(const BivariatePolynomial& p, const BivariatePolynomial& q, Complex x0,
                        Complex y0) {
  const System s(p, q);
  const double cond = inverse_norm(s.jacobian(x0, y0));
  const double res = s.residual(x0, y0);
  if (res == 0.0) return 0.0;
  return res * cond;
}

}  // namespace detrep
