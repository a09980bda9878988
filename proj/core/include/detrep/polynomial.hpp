#pragma once

#include <utility>
#include <vector>

#include "detrep/types.hpp"

namespace detrep {

/// Dense bivariate polynomial p(x, y) = sum_{j+k<=n} a[j][k] x^j y^k.
///
/// Coefficients are kept in a triangular table: row j holds the n-j+1
/// entries for k = 0..n-j. The stored degree is exact; coefficients of the
/// top band whose magnitude is at most 1e-14 * max|a| count as structural
/// zeros and are dropped on construction. The zero polynomial has degree 0.
class BivariatePolynomial {
 public:
  using Table = std::vector<std::vector<Complex>>;

  /// Zero polynomial.
  BivariatePolynomial();

  /// Throws InvalidInput when the table is not triangular or holds a
  /// non-finite value.
  explicit BivariatePolynomial(Table rows);

  static BivariatePolynomial constant(Complex c);
  static BivariatePolynomial monomial(int j, int k, Complex c = 1.0);
  /// a + b x + c y
  static BivariatePolynomial linear(Complex a, Complex b, Complex c);
  /// Zero-filled table of the given degree, for building coefficients.
  static Table empty_table(int degree);

  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept;
  bool is_real() const noexcept;

  /// Coefficient of x^j y^k; zero outside the table.
  Complex coeff(int j, int k) const noexcept;
  const Table& table() const noexcept { return rows_; }

  double max_abs_coeff() const noexcept;
  /// sum |a_jk|, an upper bound for |p| on the closed unit bidisk.
  double abs_coeff_sum() const noexcept;

  /// Top form coefficients a[n-i][i] for i = 0..n, i.e. the degree-n band
  /// read from x^n towards y^n.
  std::vector<Complex> top_form() const;

  /// Copy with every coefficient of magnitude <= tol set to exactly zero.
  BivariatePolynomial chopped(double tol) const;
  /// Copy with x and y interchanged.
  BivariatePolynomial swapped() const;

  Complex operator()(Complex x, Complex y) const noexcept;

  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator*=(Complex s);

  friend BivariatePolynomial operator+(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator*(BivariatePolynomial a, Complex s) {
    return a *= s;
  }
  friend BivariatePolynomial operator*(Complex s, BivariatePolynomial a) {
    return a *= s;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);

  friend bool operator==(const BivariatePolynomial& a,
                         const BivariatePolynomial& b);

 private:
  void normalize();

  int degree_ = 0;
  Table rows_;
};

/// Horner evaluation, y innermost.
Complex evaluate(const BivariatePolynomial& p, Complex x, Complex y) noexcept;

/// (dp/dx, dp/dy), exact coefficient shifts.
std::pair<BivariatePolynomial, BivariatePolynomial> partial_derivatives(
    const BivariatePolynomial& p);

/// P(x, y) = sum x^j y^k P[j][k] with square k-by-k blocks.
class MatrixBivariatePolynomial {
 public:
  using Table = std::vector<std::vector<Matrix>>;

  MatrixBivariatePolynomial() = default;
  /// All blocks must be square of one size; throws InvalidInput otherwise.
  explicit MatrixBivariatePolynomial(Table rows);

  /// Wraps a scalar polynomial as 1-by-1 blocks.
  static MatrixBivariatePolynomial from_scalar(const BivariatePolynomial& p);

  int degree() const noexcept { return degree_; }
  Index block_size() const noexcept { return block_size_; }
  const Table& table() const noexcept { return rows_; }

  /// Block at x^j y^k; a zero block outside the table.
  Matrix coeff(int j, int k) const;
  bool has_term(int j, int k) const noexcept;

  /// sum of spectral norms of the blocks.
  double norm_sum() const;

 private:
  int degree_ = 0;
  Index block_size_ = 0;
  Table rows_;
};

Matrix evaluate_matrix(const MatrixBivariatePolynomial& p, Complex x,
                       Complex y);

}  // namespace detrep
