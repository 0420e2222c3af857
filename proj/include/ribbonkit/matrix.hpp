#pragma once

// Dense matrices over the cyclotomic field.

#include <cstddef>
#include <string>
#include <vector>

#include "ribbonkit/cyclo.hpp"

namespace ribbonkit {

class Matrix {
 public:
  Matrix(ContextPtr ctx, std::size_t rows, std::size_t cols);

  static Matrix identity(ContextPtr ctx, std::size_t n);
  static Matrix diagonal(ContextPtr ctx, const std::vector<CycNumber>& entries);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const CycNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  CycNumber& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const CycNumber& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const CycNumber& s) { return a *= s; }
  friend Matrix operator*(const CycNumber& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(unsigned exponent) const;
  Matrix transpose() const;
  /// Kronecker product; the left factor indexes the most significant digit.
  Matrix kron(const Matrix& other) const;
  /// Gauss-Jordan inverse; throws DivisionByZeroError when singular.
  Matrix inverse() const;
  std::size_t rank() const;

  /// If the matrix is c * identity, stores c and returns true.
  bool scalar_value(CycNumber& out) const;

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycNumber> data_;
};

}  // namespace ribbonkit
