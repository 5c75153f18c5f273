#include "cosetlab/mallows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosetlab/qanalog.hpp"

namespace cosetlab {

ExactProb mallows_pmf(const MallowsModel& model, const Permutation& w) {
  if (w.size() != model.n)
    throw std::invalid_argument("mallows_pmf: permutation size mismatch");
  return ExactProb(ipow(BigInt(model.q), static_cast<unsigned>(w.inversions())),
                   q_factorial(model.n, model.q));
}

Permutation mallows_sample(const MallowsModel& model, Rng& rng) {
  const int n = model.n;
  const int q = model.q;
  // [m]_q table; [i]_q is the total placement weight for symbol i.
  std::vector<BigInt> qint(n + 1);
  for (int m = 0; m <= n; ++m) qint[m] = q_int(m, q);

  std::vector<int> row;
  row.reserve(n);
  for (int i = 1; i <= n; ++i) {
    // Offset k from the left has weight q^{i-1-k}; equivalently j = i-1-k
    // has weight q^j. Draw u uniform below [i]_q; j is the largest index
    // with [j]_q <= u, found by scan over the cumulative table.
    const BigInt u = uniform_bigint_below(rng, qint[i]);
    int j = i - 1;
    while (j > 0 && qint[j] > u) --j;
    const int k = i - 1 - j;
    row.insert(row.begin() + k, i);
  }
  return Permutation(std::move(row));
}

std::vector<Rational> inversion_distribution(const MallowsModel& model,
                                             const EnumLimits& limits) {
  if (model.n > limits.max_inversion_poly_n)
    throw std::length_error("inversion_distribution: n exceeds polynomial cap");
  const auto counts = mahonian_coefficients(model.n);
  const BigInt z = q_factorial(model.n, model.q);
  std::vector<Rational> pmf(counts.size());
  BigInt qa = 1;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    pmf[a] = Rational(counts[a] * qa, z);
    qa *= model.q;
  }
  return pmf;
}

CltParams inversion_clt_params(const MallowsModel& model) {
  if (model.n < 2) throw std::domain_error("inversion_clt_params: n >= 2");
  const double n = model.n, q = model.q;
  return {n * (n - 1) / 2.0 - (n - 1) / (q - 1),
          std::sqrt((n - 1) * q) / (q - 1)};
}

Rational reversal_cell_mass(int n, int q) {
  return Rational(ipow(BigInt(q), static_cast<unsigned>(n) * (n - 1) / 2),
                  q_factorial(n, q));
}

Rational reversal_cell_mass_product_form(int n, int q) {
  // c(q) (1 - 1/q)^{n-1}, c(q) = prod_{i=2}^{n} (1 - q^{-i})^{-1}.
  Rational r = rpow(Rational(q - 1, q), n - 1);
  for (int i = 2; i <= n; ++i)
    r /= Rational(1) - Rational(1, ipow(BigInt(q), static_cast<unsigned>(i)));
  return r;
}

namespace {

void check_positions(int n, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n - 1)
      throw std::invalid_argument("descent positions must lie in 1..n-1");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("descent positions must be strictly increasing");
  }
}

// prod over maximal runs of U of [run+1]_q!
Rational run_factorial_product(const std::vector<int>& u, int q) {
  Rational prod = 1;
  std::size_t i = 0;
  while (i < u.size()) {
    std::size_t j = i;
    while (j + 1 < u.size() && u[j + 1] == u[j] + 1) ++j;
    prod *= Rational(q_factorial(static_cast<int>(j - i) + 2, q));
    i = j + 1;
  }
  return prod;
}

}  // namespace

ExactProb descent_subset_prob(const MallowsModel& model, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  check_positions(model.n, positions);
  const int k = static_cast<int>(positions.size());
  if (k > 30) throw std::length_error("descent_subset_prob: set too large");
  // P(all of S descends) = sum over U subset of S of (-1)^{|U|} P(ascents at U),
  // and P(ascents at U) factors into reciprocal q-factorials over runs of U.
  Rational total = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> u;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1u) u.push_back(positions[i]);
    const Rational term = Rational(1) / run_factorial_product(u, model.q);
    total += (u.size() % 2 == 0) ? term : -term;
  }
  return ExactProb(total);
}

ExactProb descent_set_exact_prob(const MallowsModel& model, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  check_positions(model.n, positions);
  const int k = static_cast<int>(positions.size());
  std::vector<int> s(k + 2);
  s[0] = 0;
  for (int i = 0; i < k; ++i) s[i + 1] = positions[i];
  s[k + 1] = model.n;
  std::vector<std::vector<Rational>> m(k + 1, std::vector<Rational>(k + 1));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      const int d = s[j + 1] - s[i];
      m[i][j] = d < 0 ? Rational(0) : Rational(1) / Rational(q_factorial(d, model.q));
    }
  return ExactProb(rational_det(std::move(m)));
}

ExactProb descent_run_prob(int k, int q) {
  if (k < 1) throw std::domain_error("descent_run_prob: k >= 1");
  return ExactProb(ipow(BigInt(q), static_cast<unsigned>(k + 1) * k / 2),
                   q_factorial(k + 1, q));
}

DescentMoments descent_moments(const MallowsModel& model) {
  const int n = model.n, q = model.q;
  if (n < 2) throw std::domain_error("descent_moments: n >= 2");
  const Rational mean = Rational(BigInt(q) * (n - 1), q + 1);
  const Rational variance =
      Rational(q) *
      (Rational(BigInt(q) * q - q + 1) * (Rational(n) - BigInt(q) * q + 3 * q - 1)) /
      (Rational(BigInt(q + 1) * (q + 1)) * (1 + q + BigInt(q) * q));
  return {mean, variance};
}

Rational descent_variance_exact(const MallowsModel& model) {
  const int n = model.n, q = model.q;
  if (n < 2) throw std::domain_error("descent_variance_exact: n >= 2");
  const Rational p = Rational(q, q + 1);  // P(descent at any fixed position)
  const Rational var1 = p * (1 - p);
  if (n == 2) return var1;
  const Rational p2 = descent_run_prob(2, q).value();  // P(descents at i, i+1)
  const Rational cov = p2 - p * p;
  return Rational(n - 1) * var1 + Rational(2) * (n - 2) * cov;
}

}  // namespace cosetlab
