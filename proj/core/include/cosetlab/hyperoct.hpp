#pragma once

#include <vector>

#include "cosetlab/numbers.hpp"
#include "cosetlab/partition.hpp"
#include "cosetlab/permutation.hpp"
#include "cosetlab/rng.hpp"

namespace cosetlab {

// ---- The coset statistic -------------------------------------------------
//
// For sigma in S_2n build the graph on 1..2n with red edges {2i-1, 2i} and
// blue edges {sigma(2i-1), sigma(2i)}. Components are alternating cycles of
// even length; halving the lengths gives a partition of n.
Partition coset_partition(const Permutation& sigma);

BigInt hyperoct_order(int n);                     // 2^n n!
BigInt hyperoct_coset_size(const Partition& lam); // |B_n|^2 / (2^l z_lam)

// Two conjugate embeddings of the hyperoctahedral group in S_2n.
//
// The stabilizer of the perfect matching {2i-1, 2i} is the subgroup under
// which coset_partition is a two-sided coset invariant. The centrally
// symmetric copy (sigma(i) + sigma(2n+1-i) = 2n+1) is the embedding usually
// written down explicitly; the two are conjugate, so coset sizes agree, but
// the matching statistic is invariant only for the matching stabilizer.
bool preserves_matching(const Permutation& sigma);
bool is_centrally_symmetric(const Permutation& sigma);
std::vector<Permutation> matching_group(int n);
std::vector<Permutation> centrally_symmetric_group(int n);

// ---- Ewens sampling formula ----------------------------------------------

struct EwensModel {
  int n;
  Rational theta;

  EwensModel(int n_, Rational theta_) : n(n_), theta(std::move(theta_)) {
    if (n < 1) throw std::domain_error("EwensModel: n >= 1 required");
    if (theta <= 0) throw std::domain_error("EwensModel: theta > 0 required");
  }
};

// P(lambda) = n! theta^l / (z_lambda theta(theta+1)...(theta+n-1)).
// At theta = 1/2 this equals hyperoct_coset_size(lambda) / (2n)!.
ExactProb ewens_pmf(const EwensModel& model, const Partition& lam);

// Chinese-restaurant sampler; exact rational threshold comparisons.
Partition ewens_sample(const EwensModel& model, Rng& rng);

// E[number of parts] = sum_{k=0}^{n-1} theta/(theta+k).
Rational ewens_mean_parts(const EwensModel& model);

// ---- The f statistic ------------------------------------------------------

BigInt f_statistic(const Partition& lam);  // z_lambda 2^{l(lambda)}

// Move one box from the last row to the end of the first row. Defined for
// every partition except (n); f strictly decreases under the move.
Partition box_move(const Partition& lam);

// ---- Cycle index ----------------------------------------------------------

// sum over lambda |- n of z_lambda^{-1} 2^{-l} prod_i x_i^{a_i(lambda)}.
// Equals (C(2n,n)/4^n) * average over S_2n of prod x_i^{a_i(lambda_sigma)}.
Rational cycle_index_sum(int n, const std::vector<Rational>& x);

// The brute-force right-hand side: average of prod x_i^{a_i(lambda_sigma)}
// over all of S_2n. Exhaustive; desk scale only.
Rational brute_cycle_average(int n, const std::vector<Rational>& x);

// ---- Poissonization -------------------------------------------------------

// Unnormalized negative-binomial(1/2, 1-t) weight C(2n,n) t^n / 4^n; the
// normalizer is sqrt(1-t), kept symbolic so ratios stay rational.
Rational nb_weight(int n, const Rational& t);

struct PoissonizedDraw {
  int n;                       // size drawn from NB(1/2, 1-t)
  std::vector<long long> a;    // a[i-1] = number of parts of size i
};

// Draw n by exact inverse CDF (smallest n with (1-t) S_n^2 >= u^2, S_n the
// partial weight sum), then a uniform sigma in S_2n, and report the part
// multiplicities of its coset partition. Truncated where the omitted NB mass
// is below 1e-12.
PoissonizedDraw poissonization_sample(const Rational& t, Rng& rng);

}  // namespace cosetlab
