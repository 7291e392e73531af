#include "cuntz/matrix.hpp"

#include "cuntz/errors.hpp"

namespace cuntz {

Matrix::Matrix(int dim) : dim_(dim) {
  if (dim_ < 0) throw DomainError("negative matrix dimension");
  entries_.resize(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_));
}

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int k = 0; k < dim; ++k) m(k, k) = Gaussian(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Gaussian>>& rows) {
  Matrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.dim_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.dim_) throw DomainError("matrix is not square");
    for (int c = 0; c < m.dim_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c).conj();
  }
  return out;
}

Gaussian Matrix::trace() const {
  Gaussian t;
  for (int k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

bool Matrix::is_hermitian() const {
  for (int r = 0; r < dim_; ++r) {
    for (int c = r; c < dim_; ++c) {
      if ((*this)(r, c) != (*this)(c, r).conj()) return false;
    }
  }
  return true;
}

bool Matrix::is_unitary() const {
  Matrix id = identity(dim_);
  Matrix a = adjoint();
  return a * *this == id && *this * a == id;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.dim_ != dim_) throw DomainError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.dim_ != dim_) throw DomainError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  Matrix out(a.dim_);
  for (int r = 0; r < a.dim_; ++r) {
    for (int k = 0; k < a.dim_; ++k) {
      const Gaussian& lhs = a(r, k);
      if (lhs.is_zero()) continue;
      for (int c = 0; c < a.dim_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += lhs * b(k, c);
      }
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string out;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if (c) out += ' ';
      out += (*this)(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.is_hermitian()) throw DomainError("matrix is not Hermitian");
}

bool is_psd(const HermitianMatrix& h) {
  Matrix a = h.matrix();
  const int dim = a.dim();
  std::vector<bool> done(static_cast<std::size_t>(dim), false);
  for (int step = 0; step < dim; ++step) {
    int pivot = -1;
    for (int k = 0; k < dim; ++k) {
      if (done[k]) continue;
      // Diagonal entries of a Hermitian matrix are real.
      int s = a(k, k).re().sign();
      if (s < 0) return false;
      if (s > 0 && pivot < 0) pivot = k;
    }
    if (pivot < 0) {
      // Every remaining diagonal entry is zero, so PSD forces the whole
      // remaining block to vanish.
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          if (!done[r] && !done[c] && !a(r, c).is_zero()) return false;
        }
      }
      return true;
    }
    done[pivot] = true;
    const Gaussian p = a(pivot, pivot);
    for (int r = 0; r < dim; ++r) {
      if (done[r] || a(r, pivot).is_zero()) continue;
      Gaussian factor = a(r, pivot) / p;
      for (int c = 0; c < dim; ++c) {
        if (!done[c]) a(r, c) -= factor * a(pivot, c);
      }
    }
  }
  return true;
}

}  // namespace cuntz
