#include "squaretile/matrix.hpp"

#include <sstream>
#include <utility>

#include "squaretile/error.hpp"

namespace squaretile {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvariantViolation("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw InvariantViolation("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_integral() const {
  for (const auto& x : data_)
    if (x.get_den() != 1) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvariantViolation("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvariantViolation("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvariantViolation("matrix product size mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw InvariantViolation("matrix-vector size mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix power(const Matrix& m, unsigned exponent) {
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead, j));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(Matrix m) {
  if (!m.square()) throw InvariantViolation("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Matrix checked_inverse(const Matrix& m) {
  auto inv = inverse(m);
  if (!inv) throw InputError("matrix is singular");
  return *inv;
}

LinearSolver::LinearSolver(const Matrix& a) : rows_(a.rows()), cols_(a.cols()) {
  Matrix aug(rows_, cols_ + rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = a(r, c);
    aug(r, cols_ + r) = 1;
  }
  RowEchelon e = row_reduce(aug);
  for (auto p : e.pivots)
    if (p < cols_) pivots_.push_back(p);
  transform_ = Matrix(rows_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rows_; ++c) transform_(r, c) = e.reduced(r, cols_ + c);
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
  if (b.size() != rows_) throw InvariantViolation("solver right-hand side has wrong length");
  const Vector y = transform_ * b;
  for (std::size_t r = pivots_.size(); r < rows_; ++r)
    if (sgn(y[r]) != 0) return std::nullopt;
  Vector x(cols_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = y[r];
  return x;
}

Vector Span::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < dimension_; ++j) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool Span::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Span::insert(const Vector& v) {
  if (v.size() != dimension_) throw InvariantViolation("span vector has wrong length");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dimension_ && sgn(r[p]) == 0) ++p;
  if (p == dimension_) return false;
  const Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = rows_[i][p];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < dimension_; ++j) rows_[i][j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vector scaled_to_primitive_integers(const Vector& v) {
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  Vector out(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * den;
    g = gcd(g, out[i].get_num());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

long to_long(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InvariantViolation("expected a machine integer");
  return q.get_num().get_si();
}

}  // namespace squaretile
