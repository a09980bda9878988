#include "detrep/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace detrep {
namespace {

constexpr double kStructuralZero = 1e-14;

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

BivariatePolynomial::BivariatePolynomial() : rows_{{Complex{0.0}}} {}

BivariatePolynomial::BivariatePolynomial(Table rows) : rows_(std::move(rows)) {
  if (rows_.empty()) {
    rows_ = {{Complex{0.0}}};
    return;
  }
  const int n = static_cast<int>(rows_.size()) - 1;
  for (int j = 0; j <= n; ++j) {
    if (static_cast<int>(rows_[j].size()) != n - j + 1) {
      throw InvalidInput("coefficient row " + std::to_string(j) + " has " +
                         std::to_string(rows_[j].size()) + " entries, expected " +
                         std::to_string(n - j + 1));
    }
    for (const Complex& c : rows_[j]) {
      if (!finite(c)) {
        throw InvalidInput("non-finite coefficient in row " + std::to_string(j));
      }
    }
  }
  degree_ = n;
  normalize();
}

BivariatePolynomial::Table BivariatePolynomial::empty_table(int degree) {
  Table t(static_cast<std::size_t>(degree + 1));
  for (int j = 0; j <= degree; ++j) t[j].assign(static_cast<std::size_t>(degree - j + 1), 0.0);
  return t;
}

BivariatePolynomial BivariatePolynomial::constant(Complex c) {
  return BivariatePolynomial(Table{{c}});
}

BivariatePolynomial BivariatePolynomial::monomial(int j, int k, Complex c) {
  if (j < 0 || k < 0) throw InvalidInput("negative monomial exponent");
  Table t = empty_table(j + k);
  t[j][k] = c;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::linear(Complex a, Complex b, Complex c) {
  return BivariatePolynomial(Table{{a, c}, {b}});
}

void BivariatePolynomial::normalize() {
  const double scale = max_abs_coeff();
  if (scale == 0.0) {
    degree_ = 0;
    rows_ = {{Complex{0.0}}};
    return;
  }
  const double tol = kStructuralZero * scale;
  int d = degree_;
  for (; d > 0; --d) {
    bool band_nonzero = false;
    for (int j = 0; j <= d; ++j) {
      if (std::abs(rows_[j][d - j]) > tol) {
        band_nonzero = true;
        break;
      }
    }
    if (band_nonzero) break;
  }
  if (d == degree_) return;
  Table t = empty_table(d);
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d - j; ++k) t[j][k] = rows_[j][k];
  rows_ = std::move(t);
  degree_ = d;
}

bool BivariatePolynomial::is_zero() const noexcept {
  return degree_ == 0 && rows_[0][0] == Complex{0.0};
}

bool BivariatePolynomial::is_real() const noexcept {
  for (const auto& row : rows_)
    for (const Complex& c : row)
      if (c.imag() != 0.0) return false;
  return true;
}

Complex BivariatePolynomial::coeff(int j, int k) const noexcept {
  if (j < 0 || k < 0 || j + k > degree_) return 0.0;
  return rows_[j][k];
}

double BivariatePolynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& row : rows_)
    for (const Complex& c : row) m = std::max(m, std::abs(c));
  return m;
}

double BivariatePolynomial::abs_coeff_sum() const noexcept {
  double s = 0.0;
  for (const auto& row : rows_)
    for (const Complex& c : row) s += std::abs(c);
  return s;
}

std::vector<Complex> BivariatePolynomial::top_form() const {
  std::vector<Complex> band(static_cast<std::size_t>(degree_ + 1));
  for (int i = 0; i <= degree_; ++i) band[i] = rows_[degree_ - i][i];
  return band;
}

BivariatePolynomial BivariatePolynomial::chopped(double tol) const {
  Table t = rows_;
  for (auto& row : t)
    for (Complex& c : row)
      if (std::abs(c) <= tol) c = 0.0;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  Table t = empty_table(degree_);
  for (int j = 0; j <= degree_; ++j)
    for (int k = 0; k <= degree_ - j; ++k) t[k][j] = rows_[j][k];
  return BivariatePolynomial(std::move(t));
}

Complex BivariatePolynomial::operator()(Complex x, Complex y) const noexcept {
  return evaluate(*this, x, y);
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
  const int n = std::max(degree_, rhs.degree_);
  Table t = empty_table(n);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n - j; ++k) t[j][k] = coeff(j, k) + rhs.coeff(j, k);
  *this = BivariatePolynomial(std::move(t));
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
  const int n = std::max(degree_, rhs.degree_);
  Table t = empty_table(n);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n - j; ++k) t[j][k] = coeff(j, k) - rhs.coeff(j, k);
  *this = BivariatePolynomial(std::move(t));
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(Complex s) {
  for (auto& row : rows_)
    for (Complex& c : row) c *= s;
  normalize();
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  const int n = a.degree_ + b.degree_;
  auto t = BivariatePolynomial::empty_table(n);
  for (int j1 = 0; j1 <= a.degree_; ++j1)
    for (int k1 = 0; k1 <= a.degree_ - j1; ++k1) {
      const Complex c1 = a.rows_[j1][k1];
      if (c1 == Complex{0.0}) continue;
      for (int j2 = 0; j2 <= b.degree_; ++j2)
        for (int k2 = 0; k2 <= b.degree_ - j2; ++k2)
          t[j1 + j2][k1 + k2] += c1 * b.rows_[j2][k2];
    }
  return BivariatePolynomial(std::move(t));
}

bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return a.degree_ == b.degree_ && a.rows_ == b.rows_;
}

Complex evaluate(const BivariatePolynomial& p, Complex x, Complex y) noexcept {
  const auto& rows = p.table();
  const int n = p.degree();
  Complex acc = 0.0;
  for (int j = n; j >= 0; --j) {
    Complex inner = 0.0;
    for (int k = n - j; k >= 0; --k) inner = inner * y + rows[j][k];
    acc = acc * x + inner;
  }
  return acc;
}

std::pair<BivariatePolynomial, BivariatePolynomial> partial_derivatives(
    const BivariatePolynomial& p) {
  const int n = p.degree();
  if (n == 0) return {BivariatePolynomial{}, BivariatePolynomial{}};
  auto dx = BivariatePolynomial::empty_table(n - 1);
  auto dy = BivariatePolynomial::empty_table(n - 1);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n - j; ++k) {
      const Complex c = p.coeff(j, k);
      if (j > 0) dx[j - 1][k] += static_cast<double>(j) * c;
      if (k > 0) dy[j][k - 1] += static_cast<double>(k) * c;
    }
  return {BivariatePolynomial(std::move(dx)), BivariatePolynomial(std::move(dy))};
}

// ---------------------------------------------------------------------------

MatrixBivariatePolynomial::MatrixBivariatePolynomial(Table rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidInput("matrix polynomial without coefficients");
  const int n = static_cast<int>(rows_.size()) - 1;
  block_size_ = rows_[0].empty() ? 0 : rows_[0][0].rows();
  if (block_size_ == 0) throw InvalidInput("matrix polynomial with empty blocks");
  double scale = 0.0;
  for (int j = 0; j <= n; ++j) {
    if (static_cast<int>(rows_[j].size()) != n - j + 1)
      throw InvalidInput("coefficient row " + std::to_string(j) + " has wrong length");
    for (const Matrix& m : rows_[j]) {
      if (m.rows() != block_size_ || m.cols() != block_size_)
        throw InvalidInput("coefficient blocks must be square and of equal size");
      if (!m.allFinite()) throw InvalidInput("non-finite block coefficient");
      scale = std::max(scale, m.cwiseAbs().maxCoeff());
    }
  }
  int d = n;
  const double tol = kStructuralZero * scale;
  for (; d > 0; --d) {
    bool band_nonzero = false;
    for (int j = 0; j <= d && !band_nonzero; ++j)
      band_nonzero = rows_[j][d - j].cwiseAbs().maxCoeff() > tol;
    if (band_nonzero) break;
  }
  rows_.resize(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) rows_[j].resize(static_cast<std::size_t>(d - j + 1));
  degree_ = d;
}

MatrixBivariatePolynomial MatrixBivariatePolynomial::from_scalar(const BivariatePolynomial& p) {
  Table t(static_cast<std::size_t>(p.degree() + 1));
  for (int j = 0; j <= p.degree(); ++j)
    for (int k = 0; k <= p.degree() - j; ++k)
      t[j].push_back(Matrix::Constant(1, 1, p.coeff(j, k)));
  return MatrixBivariatePolynomial(std::move(t));
}

Matrix MatrixBivariatePolynomial::coeff(int j, int k) const {
  if (j < 0 || k < 0 || j + k > degree_) return Matrix::Zero(block_size_, block_size_);
  return rows_[j][k];
}

bool MatrixBivariatePolynomial::has_term(int j, int k) const noexcept {
  if (j < 0 || k < 0 || j + k > degree_) return false;
  return !rows_[j][k].isZero(0.0);
}

double MatrixBivariatePolynomial::norm_sum() const {
  double s = 0.0;
  for (const auto& row : rows_)
    for (const Matrix& m : row) {
      Eigen::JacobiSVD<Matrix> svd(m);
      s += svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    }
  return s;
}

Matrix evaluate_matrix(const MatrixBivariatePolynomial& p, Complex x, Complex y) {
  const int n = p.degree();
  const Index k = p.block_size();
  Matrix acc = Matrix::Zero(k, k);
  for (int j = n; j >= 0; --j) {
    Matrix inner = Matrix::Zero(k, k);
    for (int l = n - j; l >= 0; --l) inner = inner * y + p.table()[j][l];
    acc = acc * x + inner;
  }
  return acc;
}

}  // namespace detrep
