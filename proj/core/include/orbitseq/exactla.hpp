#pragma once

// Dense matrices over the rationals with exact Gaussian elimination.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orbitseq::exactla {

/// Arbitrary-precision rational in canonical form (positive denominator,
/// reduced). GMP keeps mpq_class canonical after every arithmetic operation.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  /// Entries written here need not be in lowest terms; every operation
  /// canonicalizes its operands first.
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void canonicalize();

  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Columns of *this followed by columns of `right`.
  Matrix hstack(const Matrix& right) const;

  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix scalar_identity(std::size_t n, const Rational& value);

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The pivot row for each column is the candidate
/// whose entry has the smallest numerator magnitude; ties go to the lowest row.
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the null space, one vector per free column of the echelon form,
/// in increasing free-column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// dim ker(m - eigenvalue * I). Throws dimension_error on non-square input.
std::size_t eigenspace_dim(const Matrix& m, const Rational& eigenvalue);

/// Indices of a maximal linearly independent set of columns, chosen greedily
/// from the left.
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Some x with a * x = b (free variables set to zero). `found` is false when
/// b is outside the column space. Unique when a has full column rank.
struct Solution {
  bool found = false;
  Vector x;
};
Solution solve(const Matrix& a, const Vector& b);

bool is_zero(const Vector& v);

}  // namespace orbitseq::exactla
