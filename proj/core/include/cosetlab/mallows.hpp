#pragma once

#include <vector>

#include "cosetlab/limits.hpp"
#include "cosetlab/numbers.hpp"
#include "cosetlab/permutation.hpp"
#include "cosetlab/rng.hpp"

namespace cosetlab {

// p_q(w) = q^{I(w)} / [n]_q! for integer q >= 2. The 0 < q < 1 regime is
// reachable through the reversal symmetry, not a separate model.
struct MallowsModel {
  int n;
  int q;

  MallowsModel(int n_, int q_) : n(n_), q(q_) {
    if (n < 1) throw std::domain_error("MallowsModel: n >= 1 required");
    if (q < 2) throw std::domain_error("MallowsModel: q >= 2 required");
  }
};

ExactProb mallows_pmf(const MallowsModel& model, const Permutation& w);

// Sequential insertion sampler: symbol i goes at offset k from the left of
// the current row with probability q^{i-1-k}(q-1)/(q^i - 1). Placement
// weights are exact integers; no floating point enters the draw.
Permutation mallows_sample(const MallowsModel& model, Rng& rng);

// Exact law of the inversion count: index a holds P(I = a), a = 0..n(n-1)/2.
std::vector<Rational> inversion_distribution(const MallowsModel& model,
                                             const EnumLimits& limits = kDefaultLimits);

struct CltParams {
  double center;
  double scale;
};

// Standardization of the inversion-count central limit theorem:
// center = n(n-1)/2 - (n-1)/(q-1), scale = sqrt((n-1)q)/(q-1).
CltParams inversion_clt_params(const MallowsModel& model);

// Mass of the largest cell, q^{C(n,2)}/[n]_q!, in two algebraic forms.
// The product form is c(q) (1 - 1/q)^{n-1} with c(q) = prod_{i=2}^{n} (1 - q^{-i})^{-1}.
Rational reversal_cell_mass(int n, int q);
Rational reversal_cell_mass_product_form(int n, int q);

// P(S is contained in the descent set) under p_q, exact. Inclusion-exclusion
// over ascent constraints; each term is a reciprocal product of q-factorials.
ExactProb descent_subset_prob(const MallowsModel& model, std::vector<int> positions);

// P(descent set equals S exactly): the (k+1)x(k+1) determinant with entries
// 1/[s_{j+1} - s_i]_q!, s_0 = 0, s_{k+1} = n, and 1/[m]! = 0 for m < 0.
ExactProb descent_set_exact_prob(const MallowsModel& model, std::vector<int> positions);

// Chance of k descents in a row: q^{C(k+1,2)} / [k+1]_q!.
ExactProb descent_run_prob(int k, int q);

struct DescentMoments {
  Rational mean;      // q(n-1)/(q+1), exact
  Rational variance;  // closed-form q(q^2-q+1)(n-q^2+3q-1)/((q+1)^2(1+q+q^2))
};

DescentMoments descent_moments(const MallowsModel& model);

// Exact variance of the descent count from the stationary one-dependent
// structure: (n-1) Var(X) + 2(n-2) Cov(X_i, X_{i+1}). Ground-truth companion
// to the closed-form variance above.
Rational descent_variance_exact(const MallowsModel& model);

}  // namespace cosetlab
