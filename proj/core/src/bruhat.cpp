#include "cosetlab/bruhat.hpp"

#include <stdexcept>

#include "cosetlab/mallows.hpp"
#include "cosetlab/qanalog.hpp"

namespace cosetlab {

namespace {

int last_nonzero_column(const FqMatrix& m, int row) {
  for (int j = m.n() - 1; j >= 0; --j)
    if (m.at(row, j) != 0) return j;
  return -1;
}

// Core elimination shared by bruhat_decompose and bruhat_cell. Left-multiplies
// A by unit lower triangular matrices (row r += c * row i, i < r) until the
// last-nonzero column positions are pairwise distinct; those positions are the
// pivots of P(w). When b1 is non-null it accumulates the inverse operations so
// that a = b1 * (reduced matrix) throughout.
Permutation eliminate(FqMatrix m, FqMatrix* b1, FqMatrix* reduced, int* ops) {
  const FqField& f = *m.field();
  const int n = m.n();
  std::vector<int> last(n);
  for (int i = 0; i < n; ++i) {
    last[i] = last_nonzero_column(m, i);
    if (last[i] < 0) throw std::domain_error("bruhat_decompose: singular matrix");
  }
  std::vector<int> w_of(n, 0);  // w_of[i] = pivot column of row i, 1-based
  int op_count = 0;
  for (int j = n - 1; j >= 0; --j) {
    int pivot = -1;
    for (int r = 0; r < n; ++r)
      if (w_of[r] == 0 && last[r] == j) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("bruhat_decompose: singular matrix");
    w_of[pivot] = j + 1;
    const int inv_p = f.inv(m.at(pivot, j));
    for (int r = pivot + 1; r < n; ++r) {
      if (w_of[r] != 0 || last[r] != j) continue;
      const int c = f.neg(f.mul(m.at(r, j), inv_p));
      for (int k = 0; k <= j; ++k)
        m.set(r, k, f.add(m.at(r, k), f.mul(c, m.at(pivot, k))));
      if (b1) {
        // m <- E m with E = I + c e_{r,pivot}; fold E^{-1} into b1 from the
        // right: column pivot of b1 -= c * column r of b1.
        const int nc = f.neg(c);
        for (int i = 0; i < n; ++i)
          b1->set(i, pivot, f.add(b1->at(i, pivot), f.mul(nc, b1->at(i, r))));
      }
      ++op_count;
      last[r] = last_nonzero_column(m, r);
      if (last[r] < 0) throw std::domain_error("bruhat_decompose: singular matrix");
    }
  }
  if (ops) *ops = op_count;
  if (reduced) *reduced = std::move(m);
  return Permutation(std::move(w_of));
}

}  // namespace

BruhatFactorization bruhat_decompose(const FqMatrix& a) {
  FqMatrix b1 = FqMatrix::identity(a.field(), a.n());
  FqMatrix reduced(a.field(), a.n());
  int ops = 0;
  Permutation w = eliminate(a, &b1, &reduced, &ops);
  // reduced = P(w) b2, so b2[w(i)][j] = reduced[i][j].
  FqMatrix b2(a.field(), a.n());
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) b2.set(w(i) - 1, j, reduced.at(i - 1, j));
  return {std::move(b1), std::move(w), std::move(b2), ops};
}

Permutation bruhat_cell(const FqMatrix& a) {
  return eliminate(a, nullptr, nullptr, nullptr);
}

BigInt borel_order(int n, int q) {
  if (n < 1) throw std::domain_error("borel_order: n >= 1");
  return ipow(BigInt(q - 1), static_cast<unsigned>(n)) *
         ipow(BigInt(q), static_cast<unsigned>(n) * (n - 1) / 2);
}

BigInt gl_order(int n, int q) { return borel_order(n, q) * q_factorial(n, q); }

BigInt bruhat_cell_size(int n, int q, const Permutation& w) {
  if (w.size() != n) throw std::invalid_argument("bruhat_cell_size: size mismatch");
  return borel_order(n, q) * ipow(BigInt(q), static_cast<unsigned>(w.inversions()));
}

FqMatrix random_borel(const FieldPtr& field, int n, Rng& rng) {
  const int q = field->q();
  FqMatrix b(field, n);
  for (int i = 0; i < n; ++i) {
    b.set(i, i, 1 + static_cast<int>(uniform_u64_below(rng, q - 1)));
    for (int j = 0; j < i; ++j)
      b.set(i, j, static_cast<int>(uniform_u64_below(rng, q)));
  }
  return b;
}

FqMatrix sample_uniform_pak(int n, int q, Rng& rng) {
  auto field = FqField::make(q);
  const Permutation w = mallows_sample(MallowsModel(n, q), rng);
  const FqMatrix b1 = random_borel(field, n, rng);
  const FqMatrix b2 = random_borel(field, n, rng);
  return b1 * FqMatrix::permutation_matrix(field, w) * b2;
}

RejectionSample sample_uniform_rejection(int n, int q, Rng& rng) {
  auto field = FqField::make(q);
  for (int attempts = 1;; ++attempts) {
    FqMatrix m(field, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.set(i, j, static_cast<int>(uniform_u64_below(rng, q)));
    if (m.is_invertible()) return {std::move(m), attempts};
  }
}

Rational gl_success_probability(int n, int q) {
  Rational p = 1;
  for (int i = 1; i <= n; ++i) {
    const BigInt qi = ipow(BigInt(q), static_cast<unsigned>(i));
    p *= Rational(qi - 1, qi);
  }
  return p;
}

namespace {

// Depth-first choice of rows outside the span of those already chosen. The
// span test keeps the chosen rows in a reduced echelon basis.
struct GlEnumerator {
  const FqField& f;
  int n;
  const std::function<void(const FqMatrix&)>& fn;
  std::vector<std::vector<std::uint8_t>> basis;  // echelon, by leading column
  std::vector<std::uint8_t> rows;                // flattened chosen rows

  void decode_row(std::uint64_t code, std::vector<std::uint8_t>& out) const {
    const int q = f.q();
    for (int j = 0; j < n; ++j) {
      out[j] = static_cast<std::uint8_t>(code % q);
      code /= q;
    }
  }

  // Reduce v against the basis; returns false (and inserts) if independent.
  bool in_span(std::vector<std::uint8_t> v, bool insert) {
    for (const auto& b : basis) {
      int lead = 0;
      while (lead < n && b[lead] == 0) ++lead;
      if (v[lead] != 0) {
        const int c = f.neg(f.mul(v[lead], f.inv(b[lead])));
        for (int j = lead; j < n; ++j)
          v[j] = static_cast<std::uint8_t>(f.add(v[j], f.mul(c, b[j])));
      }
    }
    int lead = 0;
    while (lead < n && v[lead] == 0) ++lead;
    if (lead == n) return true;
    if (insert) basis.push_back(std::move(v));
    return false;
  }

  void recurse(int depth, const FieldPtr& field) {
    if (depth == n) {
      fn(FqMatrix(field, n, rows));
      return;
    }
    std::uint64_t total = 1;
    for (int j = 0; j < n; ++j) total *= static_cast<std::uint64_t>(f.q());
    std::vector<std::uint8_t> v(n);
    for (std::uint64_t code = 1; code < total; ++code) {
      decode_row(code, v);
      const std::size_t saved = basis.size();
      if (in_span(v, true)) continue;
      rows.insert(rows.end(), v.begin(), v.end());
      recurse(depth + 1, field);
      rows.resize(rows.size() - n);
      basis.resize(saved);
    }
  }
};

}  // namespace

void for_each_gl(int n, int q, const std::function<void(const FqMatrix&)>& fn,
                 const EnumLimits& limits) {
  if (gl_order(n, q) > limits.max_group_order)
    throw std::length_error(
        "for_each_gl: group order exceeds the enumeration cap; "
        "use the samplers for Monte Carlo instead");
  auto field = FqField::make(q);
  GlEnumerator e{*field, n, fn, {}, {}};
  e.rows.reserve(static_cast<std::size_t>(n) * n);
  e.recurse(0, field);
}

}  // namespace cosetlab
