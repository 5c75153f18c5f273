#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cosetlab/numbers.hpp"

namespace cosetlab {

// Labelled count data; the common currency of the verification suites.
struct Histogram {
  std::map<std::string, long long> counts;

  void add(const std::string& label, long long k = 1) { counts[label] += k; }
  long long total() const;
};

struct GofResult {
  double statistic;
  int dof;
  double p_value;
  int pooled_cells;  // cells after pooling expected counts below 5
};

// Pearson chi-squared goodness of fit. observed[i] and expected_prob[i]
// describe the same cell; cells are pooled (smallest expected count first)
// until every expected count is at least 5.
GofResult chi2_gof(const std::vector<long long>& observed,
                   const std::vector<double>& expected_prob);

// Upper-tail probability of the chi-squared distribution with k dof.
double chi_squared_sf(double x, double k);
// Regularized lower incomplete gamma P(a, x), series/continued-fraction.
double regularized_gamma_p(double a, double x);

// 0.5 * sum |observed/total - reference|, plus any reference mass on labels
// never observed (pass it via `unseen_reference_mass`).
double tv_distance(const std::vector<long long>& observed,
                   const std::vector<double>& reference_prob,
                   double unseen_reference_mass = 0.0);

// sup_x |empirical CDF - reference CDF|, evaluated at the sample points.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& reference_cdf);

double poisson_pmf(long long k, double beta);
double normal_cdf(double x);

}  // namespace cosetlab
