#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "cosetlab/limits.hpp"
#include "cosetlab/numbers.hpp"
#include "cosetlab/partition.hpp"
#include "cosetlab/permutation.hpp"
#include "cosetlab/rng.hpp"

namespace cosetlab {

// Row margins lambda (I parts) and column margins mu (J parts), equal sums.
struct MarginSpec {
  Partition rows;
  Partition cols;

  MarginSpec(Partition rows_, Partition cols_);
  int I() const { return rows.num_parts(); }
  int J() const { return cols.num_parts(); }
  long long n() const { return rows.n(); }

  friend bool operator==(const MarginSpec& a, const MarginSpec& b) = default;
};

// Nonnegative I x J array with the given margins (validated at construction).
class ContingencyTable {
 public:
  ContingencyTable(MarginSpec margins, std::vector<long long> entries);

  const MarginSpec& margins() const { return margins_; }
  int I() const { return margins_.I(); }
  int J() const { return margins_.J(); }
  long long n() const { return margins_.n(); }
  long long at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * J() + j];
  }
  const std::vector<long long>& entries() const { return entries_; }
  long long zero_count() const;

  friend bool operator==(const ContingencyTable& a, const ContingencyTable& b) {
    return a.entries_ == b.entries_ && a.margins_ == b.margins_;
  }
  // Entry order only; intended for map keys among tables of fixed margins.
  friend auto operator<=>(const ContingencyTable& a, const ContingencyTable& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  MarginSpec margins_;
  std::vector<long long> entries_;
};

// T_ij = how many values of the j-th column block (values lambda-blocked by
// mu) land in the i-th row block of positions of sigma.
ContingencyTable table_of_permutation(const Permutation& sigma,
                                      const MarginSpec& margins);

// (prod_i lambda_i!)(prod_j mu_j!) / (n! prod_ij T_ij!)
ExactProb fisher_yates_pmf(const ContingencyTable& t);
// n! times the pmf; always an exact integer (the double-coset size).
BigInt ct_coset_size(const ContingencyTable& t);

// Sequential sampling without replacement from an urn with lambda_i balls of
// color i, drawn in column blocks of sizes mu_j. Follows fisher_yates_pmf.
ContingencyTable fy_sample(const MarginSpec& margins, Rng& rng);

// chi^2(T) = sum (T_ij - lambda_i mu_j / n)^2 / (lambda_i mu_j / n).
double chi2_stat(const ContingencyTable& t);
// The rank-one independence table T*_ij = lambda_i mu_j / n, row-major.
std::vector<double> independence_table(const MarginSpec& margins);
// sum |T_ij - T*_ij|; satisfies l1 <= sqrt(n * chi2).
double l1_to_independence(const ContingencyTable& t);

// Limit proportions alpha (rows) and beta (columns), each summing to 1.
struct CovModel {
  std::vector<double> alpha;
  std::vector<double> beta;

  CovModel(std::vector<double> alpha_, std::vector<double> beta_);
  static CovModel of(const MarginSpec& margins);
};

// Covariance of the standardized entries Z_ij = sqrt(n)(T_ij/n - alpha_i
// beta_j): the IJ x IJ Kronecker product (Diag(a) - aa^T) (x) (Diag(b) - bb^T),
// row-major with index (i*J + j).
std::vector<double> clt_covariance(const CovModel& model);

// Local-limit approximation of the coset size:
// n! (2 pi n)^{-k/2} det(S_-)^{-1/2} exp(-Z_- S_-^{-1} Z_-^T / 2), with
// k = (I-1)(J-1), Z_- the standardized entries with the last row and column
// dropped, and S_- the corresponding block of clt_covariance.
double coset_size_approx(const ContingencyTable& t, const CovModel& model);

// Minimal-length representative of the coset of T: scan rows, and within
// each row scan columns, emitting the T_ij smallest still-unused values of
// the j-th column block in increasing order.
Permutation min_length_rep(const ContingencyTable& t);

// Majorization comparison of the entry multisets (same margins required).
MajorizationOrder prec_compare(const ContingencyTable& a, const ContingencyTable& b);
// When a strictly precedes b in majorization order, the pmf of a must be
// strictly larger; returns whether that holds (true for incomparable pairs).
bool schur_check(const ContingencyTable& a, const ContingencyTable& b);

// All tables with the given margins, recursively with feasibility pruning.
// Throws std::length_error past the configured table-count cap.
void for_each_table(const MarginSpec& margins,
                    const std::function<void(const ContingencyTable&)>& fn,
                    const EnumLimits& limits = kDefaultLimits);
std::vector<ContingencyTable> all_tables(const MarginSpec& margins,
                                         const EnumLimits& limits = kDefaultLimits);

struct ZerosResult {
  std::map<long long, long long> histogram;  // zero count -> occurrences
  double mean = 0;
  double beta = 0;          // I sum_j (1 - c_j/n)^{n/I}
  double tv_to_poisson = 0; // TV(histogram, Poisson(beta))
};

// Monte Carlo zero-count experiment for constant row sums r (I rows) and the
// given column sums. Work is sharded over `workers` independently seeded
// streams derived from `seed` and merged deterministically.
ZerosResult zeros_experiment(int I, long long r, const std::vector<long long>& col_sums,
                             long long samples, std::uint64_t seed, int workers = 0);

}  // namespace cosetlab
