#include "cosetlab/statlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cosetlab {

long long Histogram::total() const {
  long long t = 0;
  for (const auto& [label, k] : counts) t += k;
  return t;
}

namespace {

// Lower incomplete gamma by power series; for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (term < sum * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper incomplete gamma by Lentz continued fraction; for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (a <= 0) throw std::domain_error("regularized_gamma_p: a > 0 required");
  if (x < 0) throw std::domain_error("regularized_gamma_p: x >= 0 required");
  if (x == 0) return 0.0;
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double chi_squared_sf(double x, double k) {
  if (x <= 0) return 1.0;
  return 1.0 - regularized_gamma_p(k / 2.0, x / 2.0);
}

GofResult chi2_gof(const std::vector<long long>& observed,
                   const std::vector<double>& expected_prob) {
  if (observed.empty() || observed.size() != expected_prob.size())
    throw std::invalid_argument("chi2_gof: size mismatch or empty input");
  const double total = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), 0LL));
  if (total <= 0) throw std::invalid_argument("chi2_gof: empty histogram");

  struct Cell {
    double obs, exp;
  };
  std::vector<Cell> cells;
  cells.reserve(observed.size());
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected_prob[i] < 0)
      throw std::invalid_argument("chi2_gof: negative expected probability");
    cells.push_back({static_cast<double>(observed[i]), expected_prob[i] * total});
  }
  // Pool the two smallest expected-count cells until all are >= 5.
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return a.exp < b.exp; });
  while (cells.size() > 1 && cells.front().exp < 5.0) {
    cells[1].obs += cells[0].obs;
    cells[1].exp += cells[0].exp;
    cells.erase(cells.begin());
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.exp < b.exp; });
  }
  double stat = 0;
  for (const auto& c : cells) {
    if (c.exp <= 0) {
      if (c.obs > 0) stat = std::numeric_limits<double>::infinity();
      continue;
    }
    const double d = c.obs - c.exp;
    stat += d * d / c.exp;
  }
  const int dof = std::max(1, static_cast<int>(cells.size()) - 1);
  return {stat, dof, chi_squared_sf(stat, dof), static_cast<int>(cells.size())};
}

double tv_distance(const std::vector<long long>& observed,
                   const std::vector<double>& reference_prob,
                   double unseen_reference_mass) {
  if (observed.size() != reference_prob.size())
    throw std::invalid_argument("tv_distance: size mismatch");
  const double total = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), 0LL));
  if (total <= 0) throw std::invalid_argument("tv_distance: empty histogram");
  double tv = unseen_reference_mass;
  for (std::size_t i = 0; i < observed.size(); ++i)
    tv += std::fabs(observed[i] / total - reference_prob[i]);
  return tv / 2.0;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& reference_cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double ks = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = reference_cdf(samples[i]);
    ks = std::max(ks, std::fabs(f - static_cast<double>(i) / n));
    ks = std::max(ks, std::fabs(static_cast<double>(i + 1) / n - f));
  }
  return ks;
}

double poisson_pmf(long long k, double beta) {
  if (k < 0 || beta < 0) throw std::domain_error("poisson_pmf: invalid arguments");
  if (beta == 0) return k == 0 ? 1.0 : 0.0;
  return std::exp(-beta + k * std::log(beta) - std::lgamma(k + 1.0));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace cosetlab
