#include "cosetlab/fq_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cosetlab {

FqMatrix::FqMatrix(FieldPtr field, int n)
    : field_(std::move(field)), n_(n), e_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw std::domain_error("FqMatrix: n >= 1 required");
}

FqMatrix::FqMatrix(FieldPtr field, int n, std::vector<std::uint8_t> entries)
    : field_(std::move(field)), n_(n), e_(std::move(entries)) {
  if (n < 1) throw std::domain_error("FqMatrix: n >= 1 required");
  if (e_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("FqMatrix: entry count mismatch");
  for (auto v : e_)
    if (v >= field_->q()) throw std::invalid_argument("FqMatrix: entry out of field");
}

FqMatrix FqMatrix::identity(FieldPtr field, int n) {
  FqMatrix m(std::move(field), n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::permutation_matrix(FieldPtr field, const Permutation& w) {
  FqMatrix m(std::move(field), w.size());
  for (int i = 1; i <= w.size(); ++i) m.set(i - 1, w(i) - 1, 1);
  return m;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.n_ != b.n_ || a.field_->q() != b.field_->q())
    throw std::invalid_argument("FqMatrix::operator*: shape/field mismatch");
  const FqField& f = *a.field_;
  const int n = a.n_;
  FqMatrix c(a.field_, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        const int bkj = b.at(k, j);
        if (bkj == 0) continue;
        c.set(i, j, f.add(c.at(i, j), f.mul(aik, bkj)));
      }
    }
  return c;
}

bool FqMatrix::is_lower_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

bool FqMatrix::is_invertible() const {
  const FqField& f = *field_;
  FqMatrix m = *this;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int j = 0; j < n_; ++j) {
        const int t = m.at(col, j);
        m.set(col, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
    const int inv_p = f.inv(m.at(col, col));
    for (int r = col + 1; r < n_; ++r) {
      const int factor = f.mul(m.at(r, col), inv_p);
      if (factor == 0) continue;
      for (int j = col; j < n_; ++j)
        m.set(r, j, f.sub(m.at(r, j), f.mul(factor, m.at(col, j))));
    }
  }
  return true;
}

FqMatrix FqMatrix::inverse() const {
  const FqField& f = *field_;
  FqMatrix m = *this;
  FqMatrix x = identity(field_, n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("FqMatrix::inverse: singular matrix");
    if (pivot != col)
      for (int j = 0; j < n_; ++j) {
        int t = m.at(col, j);
        m.set(col, j, m.at(pivot, j));
        m.set(pivot, j, t);
        t = x.at(col, j);
        x.set(col, j, x.at(pivot, j));
        x.set(pivot, j, t);
      }
    const int inv_p = f.inv(m.at(col, col));
    if (inv_p != 1)
      for (int j = 0; j < n_; ++j) {
        m.set(col, j, f.mul(m.at(col, j), inv_p));
        x.set(col, j, f.mul(x.at(col, j), inv_p));
      }
    for (int r = 0; r < n_; ++r) {
      if (r == col) continue;
      const int factor = m.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) {
        m.set(r, j, f.sub(m.at(r, j), f.mul(factor, m.at(col, j))));
        x.set(r, j, f.sub(x.at(r, j), f.mul(factor, x.at(col, j))));
      }
    }
  }
  return x;
}

}  // namespace cosetlab
