#include "ribbonkit/matrix.hpp"

#include <sstream>
#include <utility>

namespace ribbonkit {

Matrix::Matrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, CycNumber(ctx_)) {}

Matrix Matrix::identity(ContextPtr ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNumber(ctx, 1L);
  return m;
}

Matrix Matrix::diagonal(ContextPtr ctx, const std::vector<CycNumber>& entries) {
  Matrix m(std::move(ctx), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw BoundaryMismatchError("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!other.data_[i].is_zero()) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw BoundaryMismatchError("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!other.data_[i].is_zero()) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const CycNumber& scalar) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw BoundaryMismatchError("matrix shapes do not compose");
  Matrix out(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycNumber& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycNumber& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::pow(unsigned exponent) const {
  Matrix result = identity(ctx_, rows_);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

Matrix Matrix::transpose() const {
  Matrix out(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::kron(const Matrix& other) const {
  Matrix out(ctx_, rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const CycNumber& x = (*this)(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < other.rows_; ++k)
        for (std::size_t l = 0; l < other.cols_; ++l) {
          const CycNumber& y = other(k, l);
          if (!y.is_zero()) out(i * other.rows_ + k, j * other.cols_ + l) = x * y;
        }
    }
  }
  return out;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw BoundaryMismatchError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix work = *this;
  Matrix inv = identity(ctx_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DivisionByZeroError();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const CycNumber scale = work(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!work(col, j).is_zero()) work(col, j) *= scale;
      if (!inv(col, j).is_zero()) inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col).is_zero()) continue;
      const CycNumber factor = work(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(i, j) -= factor * work(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t Matrix::rank() const {
  Matrix work = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && work(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(work(pivot, j), work(rank, j));
    const CycNumber scale = work(rank, col).inverse();
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (work(i, col).is_zero()) continue;
      const CycNumber factor = work(i, col) * scale;
      for (std::size_t j = col; j < cols_; ++j)
        if (!work(rank, j).is_zero()) work(i, j) -= factor * work(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool Matrix::scalar_value(CycNumber& out) const {
  if (!is_square() || rows_ == 0) return false;
  const CycNumber& c = (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? (*this)(i, j) != c : !(*this)(i, j).is_zero()) return false;
    }
  out = c;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
    out << "]\n";
  }
  return out.str();
}

}  // namespace ribbonkit
