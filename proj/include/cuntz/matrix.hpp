#pragma once

// Square matrices over Q(i) and an exact positive-semidefiniteness test.

#include <string>
#include <vector>

#include "cuntz/scalar.hpp"

namespace cuntz {

class Matrix {
 public:
  explicit Matrix(int dim);
  static Matrix identity(int dim);
  // Throws DomainError unless the rows form a square array.
  static Matrix from_rows(const std::vector<std::vector<Gaussian>>& rows);

  int dim() const { return dim_; }
  Gaussian& operator()(int row, int col) { return entries_[index(row, col)]; }
  const Gaussian& operator()(int row, int col) const { return entries_[index(row, col)]; }

  // Conjugate transpose.
  Matrix adjoint() const;
  Gaussian trace() const;
  bool is_hermitian() const;
  bool is_unitary() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  // Row-major dump: one row per line, entries separated by single spaces.
  std::string to_string() const;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(col);
  }

  int dim_;
  std::vector<Gaussian> entries_;
};

// A Matrix validated to equal its conjugate transpose.
class HermitianMatrix {
 public:
  // Throws DomainError when `m` is not Hermitian.
  explicit HermitianMatrix(Matrix m);

  const Matrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  Matrix m_;
};

// Exact decision by symmetric pivoting: each pivot must be real and >= 0,
// and a zero pivot forces its row and column to vanish.
bool is_psd(const HermitianMatrix& m);

}  // namespace cuntz
