#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobord2/rational.hpp"

namespace cobord2 {

/// Dense exact-rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix column(const Vector& v);
  static Matrix row(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<Rational>& entries() const noexcept { return data_; }
  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;

  Matrix transpose() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

/// Kronecker product; the left factor indexes the most significant block.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form. Pivots are chosen leftmost-first and scaled
/// to 1, so the result is unique for a given row space.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, returned in reduced row-echelon form (one vector
/// per row of the result's row list).
std::vector<Vector> kernel(const Matrix& m);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Row-space basis in reduced row-echelon form, zero rows dropped.
std::vector<Vector> row_basis(const std::vector<Vector>& rows, std::size_t width);

/// `rows cols` header then one row per line of space-separated rationals.
std::string format_matrix(const Matrix& m);

}  // namespace cobord2
