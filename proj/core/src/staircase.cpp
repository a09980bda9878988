// Staircase-type extraction of the common regular part of the coupled
// pencils (D1 - x D0, D2 - y D0).
//
// A column step removes ker D0 = span V2 together with the rows spanned by
// [D1 V2, D2 V2]; a row step is the same on the adjoint side. Regular
// eigenvectors keep a nonzero component in what remains, so finite regular
// eigenvalues survive every step.

#include <sstream>

#include "detrep/linalg.hpp"
#include "detrep/twopar.hpp"

namespace detrep {
namespace {

std::string describe(const StaircaseStep& s, const char* what, double gap) {
  std::ostringstream os;
  os << "ambiguous " << what << " rank decision at " << s.rows_before << "x" << s.cols_before
     << " (singular value gap " << gap << ")";
  return os.str();
}

}  // namespace

RegularPart extract_regular_part(const DeltaTriple& deltas, const StaircaseOptions& options) {
  RegularPart out;
  Matrix d0 = deltas.d0;
  Matrix d1 = deltas.d1;
  Matrix d2 = deltas.d2;
  const Index n_rows = d0.rows();
  const Index n_cols = d0.cols();
  out.left = Matrix::Identity(n_rows, n_rows);
  out.right = Matrix::Identity(n_cols, n_cols);

  const double rank_tol = options.rank_tol.value_or(default_rank_tol(std::max(n_rows, n_cols)));
  const double ref0 = linalg::spectral_norm(d0);
  const double ref12 = std::max(linalg::spectral_norm(d1), linalg::spectral_norm(d2));
  const double thresh0 = rank_tol * (ref0 > 0 ? ref0 : 1.0);
  const double thresh12 = rank_tol * (ref12 > 0 ? ref12 : 1.0);

  const Index max_steps = n_rows + n_cols + 1;
  bool settled = false;
  for (Index step = 0; step < max_steps; ++step) {
    const Index m = d0.rows();
    const Index p = d0.cols();
    if (m == 0 || p == 0) {
      settled = true;
      break;
    }
    const linalg::TwoSidedSplit split = linalg::two_sided_split(d0, thresh0);
    const Index r = split.rank;
    if (m == p && r == m) {
      settled = true;
      break;
    }

    StaircaseStep rec;
    rec.rows_before = m;
    rec.cols_before = p;
    rec.rank_d0 = r;
    rec.gap_d0 = linalg::rank_gap(split.singular_values, r);

    if (p >= m) {
      rec.kind = StaircaseStep::Kind::Column;
      const Matrix& v1 = split.right_range;
      const Matrix& v2 = split.right_null;
      Matrix h(m, 2 * v2.cols());
      h << d1 * v2, d2 * v2;
      const linalg::RangeSplit img = linalg::column_space(h, thresh12);
      rec.rank_coupled = img.rank;
      rec.gap_coupled = linalg::rank_gap(img.singular_values, img.rank);
      const Matrix& u2 = img.complement;
      d0 = u2.adjoint() * d0 * v1;
      d1 = u2.adjoint() * d1 * v1;
      d2 = u2.adjoint() * d2 * v1;
      out.left = out.left * u2;
      out.right = out.right * v1;
    } else {
      rec.kind = StaircaseStep::Kind::Row;
      const Matrix& u1 = split.left_range;
      const Matrix& u2 = split.left_null;
      Matrix h(p, 2 * u2.cols());
      h << d1.adjoint() * u2, d2.adjoint() * u2;
      const linalg::RangeSplit img = linalg::column_space(h, thresh12);
      rec.rank_coupled = img.rank;
      rec.gap_coupled = linalg::rank_gap(img.singular_values, img.rank);
      const Matrix& v2 = img.complement;
      d0 = u1.adjoint() * d0 * v2;
      d1 = u1.adjoint() * d1 * v2;
      d2 = u1.adjoint() * d2 * v2;
      out.left = out.left * u1;
      out.right = out.right * v2;
    }
    if (rec.gap_d0 < options.ambiguous_gap) out.warnings.push_back(describe(rec, "Delta_0", rec.gap_d0));
    if (rec.gap_coupled < options.ambiguous_gap)
      out.warnings.push_back(describe(rec, "coupled image", rec.gap_coupled));
    out.steps.push_back(rec);
  }
  if (!settled)
    throw ConvergenceFailure("staircase reduction did not reach a regular block after " +
                             std::to_string(max_steps) + " compressions");

  if (d0.rows() != d0.cols())
    throw SingularProblem("staircase reduction collapsed to a " + std::to_string(d0.rows()) + "x" +
                          std::to_string(d0.cols()) +
                          " block; the rank decisions were inconsistent (try another rank tolerance)");

  out.reduced = {std::move(d0), std::move(d1), std::move(d2)};
  return out;
}

}  // namespace detrep
