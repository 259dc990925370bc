#include "stieltjes/matrix.hpp"

#include <utility>

#include "stieltjes/error.hpp"

namespace stieltjes {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const Constant inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Constant factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Constant>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Constant(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Constant Matrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  Matrix m = *this;
  Constant det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) return Constant();
    if (pivot != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Constant inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m(i, col).is_zero()) continue;
      const Constant factor = m(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return reduce(m).size();
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = Constant(1);
  }
  const auto pivots = reduce(aug);
  if (pivots.size() < rows_ || pivots.back() >= cols_) throw AlgebraError("singular matrix");
  Matrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
  }
  return inv;
}

std::vector<std::vector<Constant>> Matrix::left_kernel() const {
  Matrix t = transpose();
  const auto pivots = reduce(t);
  std::vector<bool> is_pivot(t.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Constant>> basis;
  for (std::size_t free = 0; free < t.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Constant> v(t.cols());
    v[free] = Constant(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -t(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
    out += "]\n";
  }
  return out;
}

}  // namespace stieltjes
