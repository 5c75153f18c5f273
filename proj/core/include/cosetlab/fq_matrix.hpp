#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cosetlab/fq.hpp"
#include "cosetlab/permutation.hpp"

namespace cosetlab {

// Dense square matrix over F_q. Desk-scale sizes; entries are field codes.
class FqMatrix {
 public:
  FqMatrix(FieldPtr field, int n);  // zero matrix
  FqMatrix(FieldPtr field, int n, std::vector<std::uint8_t> entries);

  static FqMatrix identity(FieldPtr field, int n);
  // P(w) with a one in row i, column w(i).
  static FqMatrix permutation_matrix(FieldPtr field, const Permutation& w);

  int n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, int v) { e_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::uint8_t>(v); }
  const std::vector<std::uint8_t>& entries() const { return e_; }

  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  bool is_lower_triangular() const;
  bool is_invertible() const;
  FqMatrix inverse() const;  // throws on singular

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.n_ == b.n_ && a.field_->q() == b.field_->q() && a.e_ == b.e_;
  }

 private:
  FieldPtr field_;
  int n_;
  std::vector<std::uint8_t> e_;
};

}  // namespace cosetlab

template <>
struct std::hash<cosetlab::FqMatrix> {
  std::size_t operator()(const cosetlab::FqMatrix& m) const noexcept {
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(m.field()->q());
    for (auto v : m.entries()) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};
