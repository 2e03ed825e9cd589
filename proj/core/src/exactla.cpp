#include "orbitseq/exactla.hpp"

#include <sstream>
#include <utility>

namespace orbitseq::exactla {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw dimension_error("ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  // mpq_class(2, 6) is stored as written; GMP arithmetic expects lowest terms.
  canonicalize();
}

void Matrix::canonicalize() {
  for (auto& q : data_) q.canonicalize();
}

namespace {

Matrix canonical(Matrix m) {
  m.canonicalize();
  return m;
}

Vector canonical(Vector v) {
  for (auto& q : v) q.canonicalize();
  return v;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) { return scalar_identity(n, 1); }

Matrix scalar_identity(std::size_t n, const Rational& value) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = value;
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw dimension_error("column length does not match row count");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      m(r, c) = columns[c][r];
      m(r, c).canonicalize();
    }
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    v[r] = (*this)(r, c);
  }
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (right.rows_ != rows_) {
    throw dimension_error("hstack: row counts differ");
  }
  Matrix m(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
  }
  return m;
}

Vector Matrix::apply(const Vector& input) const {
  if (input.size() != cols_) {
    throw dimension_error("apply: vector length does not match column count");
  }
  const Matrix a = canonical(*this);
  const Vector v = canonical(input);
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) != 0) acc += a(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw dimension_error("product: inner dimensions differ");
  }
  const Matrix a = canonical(lhs);
  const Matrix b = canonical(rhs);
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        m(i, j) += aik * b(k, j);
      }
    }
  }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw dimension_error("difference: shapes differ");
  }
  Matrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    Rational x = a.data_[i], y = b.data_[i];
    x.canonicalize();
    y.canonicalize();
    m.data_[i] = x - y;
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && canonical(a).data_ == canonical(b).data_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ' ';
      Rational q = (*this)(r, c);
      q.canonicalize();
      out << q.get_str();
    }
  }
  out << ']';
  return out.str();
}

Echelon row_reduce(Matrix m) {
  m.canonicalize();
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t r = lead; r < rows; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      if (best == rows ||
          mpz_cmpabs(m(r, c).get_num_mpz_t(), m(best, c).get_num_mpz_t()) < 0) {
        best = r;
      }
    }
    if (best == rows) continue;

    if (best != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(best, k), m(lead, k));
    }
    const Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < cols; ++k) m(lead, k) *= inv;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(m(lead, k)) != 0) m(r, k) -= factor * m(lead, k);
      }
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<Vector> basis;
  if (cols == 0) return basis;

  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t row = 0; row < e.pivots.size(); ++row) {
      v[e.pivots[row]] = -e.reduced(row, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t eigenspace_dim(const Matrix& m, const Rational& eigenvalue) {
  if (!m.square()) {
    throw dimension_error("eigenspace_dim: matrix is " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()) + ", not square");
  }
  return m.cols() - rank(m - scalar_identity(m.rows(), eigenvalue));
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  if (m.empty()) return {};
  return row_reduce(m).pivots;
}

Solution solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) {
    throw dimension_error("solve: right-hand side length does not match row count");
  }
  Matrix augmented = a.hstack(Matrix::from_columns(a.rows(), {b}));
  const Echelon e = row_reduce(std::move(augmented));

  Solution s;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    return s;  // inconsistent
  }
  s.found = true;
  s.x.assign(a.cols(), 0);
  for (std::size_t row = 0; row < e.pivots.size(); ++row) {
    s.x[e.pivots[row]] = e.reduced(row, a.cols());
  }
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace orbitseq::exactla
