#pragma once

#include <functional>

#include "cosetlab/fq_matrix.hpp"
#include "cosetlab/limits.hpp"
#include "cosetlab/numbers.hpp"
#include "cosetlab/rng.hpp"

namespace cosetlab {

// A = b1 * P(w) * b2 with b1, b2 invertible lower triangular.
struct BruhatFactorization {
  FqMatrix b1;
  Permutation cell;
  FqMatrix b2;
  // Number of row-elimination operations performed. Recorded for inspection
  // only; no distributional claim is attached to it.
  int elimination_ops = 0;
};

// Row-reduce A (adding earlier rows to later rows, the lower-Borel action)
// until the last-nonzero column positions of the rows are distinct; those
// positions read off w, and the reduced matrix is P(w) times a lower
// triangular factor. Throws std::domain_error on singular input.
BruhatFactorization bruhat_decompose(const FqMatrix& a);

// Just the cell of A, without accumulating the Borel factors.
Permutation bruhat_cell(const FqMatrix& a);

BigInt borel_order(int n, int q);     // (q-1)^n q^{C(n,2)}
BigInt gl_order(int n, int q);        // |B| [n]_q!
BigInt bruhat_cell_size(int n, int q, const Permutation& w);  // |B| q^{I(w)}

// Uniform element of the Borel subgroup: diagonal uniform in F_q \ {0},
// strictly lower entries uniform in F_q.
FqMatrix random_borel(const FieldPtr& field, int n, Rng& rng);

// Uniform on GL_n(F_q) as B1 P(w) B2 with w Mallows-distributed and the
// Borel factors uniform.
FqMatrix sample_uniform_pak(int n, int q, Rng& rng);

struct RejectionSample {
  FqMatrix matrix;
  int attempts;
};

// Fill an n x n array with uniform field elements until invertible.
RejectionSample sample_uniform_rejection(int n, int q, Rng& rng);

// Probability a uniform n x n matrix over F_q is invertible:
// prod_{i=1}^{n} (1 - q^{-i}). Expected rejection attempts are 1 over this.
Rational gl_success_probability(int n, int q);

// Every invertible matrix exactly once (rows chosen outside the span of the
// previous rows). Throws std::length_error past the group-order cap.
void for_each_gl(int n, int q, const std::function<void(const FqMatrix&)>& fn,
                 const EnumLimits& limits = kDefaultLimits);

}  // namespace cosetlab
