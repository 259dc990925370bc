#pragma once

#include <string>
#include <vector>

#include "stieltjes/constant.hpp"

namespace stieltjes {

/// Dense matrix over the Constant field with exact elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Constant>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Constant& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Constant& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Constant determinant() const;
  std::size_t rank() const;
  /// Throws AlgebraError when singular.
  Matrix inverse() const;
  /// Basis of {X : X * M = 0}, one row vector per element, from the reduced
  /// row echelon form of M^T (free variables set to 1 in turn).
  std::vector<std::vector<Constant>> left_kernel() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Constant> data_;
};

}  // namespace stieltjes
