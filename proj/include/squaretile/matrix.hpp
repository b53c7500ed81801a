#pragma once

// Dense exact matrices over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace squaretile {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// p/q in lowest terms. mpq_class(p, q) alone does not reduce, and GMP
/// comparisons assume reduced operands.
inline Rational fraction(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_integral() const;
  /// Row-major entries; the flattening used for Lie algebra spans.
  const std::vector<Rational>& entries() const noexcept { return data_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix power(const Matrix& m, unsigned exponent);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// Inverse that throws InputError when the matrix is singular.
Matrix checked_inverse(const Matrix& m);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; pivots are taken at the first (smallest index)
/// usable column, so the result is canonical.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m);

/// Solves A x = b for many right-hand sides with one elimination.
/// Free variables are set to zero.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& a);
  std::optional<Vector> solve(const Vector& b) const;
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Matrix transform_;  // E with E*A = R
  std::vector<std::size_t> pivots_;
};

/// Incrementally maintained span of vectors, kept in reduced echelon form.
class Span {
 public:
  explicit Span(std::size_t dimension) : dimension_(dimension) {}
  /// Adds v when it is not already in the span; returns whether it was new.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t ambient_dimension() const noexcept { return dimension_; }

 private:
  Vector reduce(Vector v) const;
  std::size_t dimension_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero(const Vector& v);
Vector scaled_to_primitive_integers(const Vector& v);
long to_long(const Rational& q);  // throws InvariantViolation on non-integers

}  // namespace squaretile
