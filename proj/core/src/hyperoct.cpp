#include "cosetlab/hyperoct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cosetlab {

Partition coset_partition(const Permutation& sigma) {
  const int m = sigma.size();
  if (m % 2 != 0)
    throw std::invalid_argument("coset_partition: permutation size must be even");
  const int n = m / 2;
  // blue[v] = partner of v across the blue edge {sigma(2i-1), sigma(2i)}.
  std::vector<int> blue(m + 1);
  for (int i = 1; i <= n; ++i) {
    const int a = sigma(2 * i - 1), b = sigma(2 * i);
    blue[a] = b;
    blue[b] = a;
  }
  auto red = [](int v) { return v % 2 == 1 ? v + 1 : v - 1; };
  std::vector<char> seen(m + 1, 0);
  std::vector<long long> parts;
  for (int v = 1; v <= m; ++v) {
    if (seen[v]) continue;
    long long half_len = 0;
    int u = v;
    while (!seen[u]) {
      seen[u] = 1;
      const int w = red(u);
      seen[w] = 1;
      u = blue[w];
      ++half_len;
    }
    parts.push_back(half_len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

BigInt hyperoct_order(int n) {
  if (n < 0) throw std::domain_error("hyperoct_order: n >= 0");
  return ipow(BigInt(2), static_cast<unsigned>(n)) * factorial(n);
}

BigInt hyperoct_coset_size(const Partition& lam) {
  const int n = static_cast<int>(lam.n());
  const BigInt b = hyperoct_order(n);
  const BigInt denom =
      ipow(BigInt(2), static_cast<unsigned>(lam.num_parts())) * z_lambda(lam);
  const BigInt size = b * b / denom;
  if (size * denom != b * b)
    throw std::logic_error("hyperoct_coset_size: non-integral size");
  return size;
}

bool preserves_matching(const Permutation& sigma) {
  const int m = sigma.size();
  if (m % 2 != 0) return false;
  for (int i = 1; i <= m / 2; ++i) {
    const int a = sigma(2 * i - 1), b = sigma(2 * i);
    const int partner = a % 2 == 1 ? a + 1 : a - 1;
    if (b != partner) return false;
  }
  return true;
}

bool is_centrally_symmetric(const Permutation& sigma) {
  const int m = sigma.size();
  if (m % 2 != 0) return false;
  for (int i = 1; i <= m / 2; ++i)
    if (sigma(i) + sigma(m + 1 - i) != m + 1) return false;
  return true;
}

std::vector<Permutation> matching_group(int n) {
  std::vector<Permutation> out;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    for (unsigned flips = 0; flips < (1u << n); ++flips) {
      std::vector<int> word(2 * n);
      for (int i = 1; i <= n; ++i) {
        const int lo = 2 * pi[i - 1] - 1, hi = 2 * pi[i - 1];
        const bool flip = (flips >> (i - 1)) & 1u;
        word[2 * i - 2] = flip ? hi : lo;
        word[2 * i - 1] = flip ? lo : hi;
      }
      out.emplace_back(std::move(word));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

std::vector<Permutation> centrally_symmetric_group(int n) {
  const int m = 2 * n;
  std::vector<Permutation> out;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> word(m);
      for (int i = 1; i <= n; ++i) {
        const int v = (signs >> (i - 1)) & 1u ? m + 1 - pi[i - 1] : pi[i - 1];
        word[i - 1] = v;
        word[m - i] = m + 1 - v;
      }
      out.emplace_back(std::move(word));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

ExactProb ewens_pmf(const EwensModel& model, const Partition& lam) {
  if (lam.n() != model.n)
    throw std::invalid_argument("ewens_pmf: partition size mismatch");
  Rational z = 1;  // theta (theta+1) ... (theta+n-1)
  for (int k = 0; k < model.n; ++k) z *= model.theta + k;
  const Rational mass = Rational(factorial(model.n)) *
                        rpow(model.theta, lam.num_parts()) /
                        (Rational(z_lambda(lam)) * z);
  return ExactProb(mass);
}

Partition ewens_sample(const EwensModel& model, Rng& rng) {
  // Chinese restaurant process: customer k+1 opens a new table with
  // probability theta/(theta+k), else joins a uniform existing customer.
  std::vector<long long> table_sizes;
  long long seated = 0;
  for (int k = 0; k < model.n; ++k) {
    const Rational p_new = model.theta / (model.theta + k);
    if (uniform_unit_rational(rng) < p_new) {
      table_sizes.push_back(1);
    } else {
      long long c = static_cast<long long>(
          uniform_u64_below(rng, static_cast<std::uint64_t>(seated)));
      for (auto& s : table_sizes) {
        if (c < s) {
          ++s;
          break;
        }
        c -= s;
      }
    }
    ++seated;
  }
  std::sort(table_sizes.begin(), table_sizes.end(), std::greater<>());
  return Partition(std::move(table_sizes));
}

Rational ewens_mean_parts(const EwensModel& model) {
  Rational s = 0;
  for (int k = 0; k < model.n; ++k) s += model.theta / (model.theta + k);
  return s;
}

BigInt f_statistic(const Partition& lam) {
  return z_lambda(lam) * ipow(BigInt(2), static_cast<unsigned>(lam.num_parts()));
}

Partition box_move(const Partition& lam) {
  if (lam.num_parts() <= 1)
    throw std::domain_error("box_move: undefined for the one-row partition");
  std::vector<long long> parts = lam.parts();
  parts.front() += 1;
  if (parts.back() == 1)
    parts.pop_back();
  else
    parts.back() -= 1;
  return Partition(std::move(parts));
}

namespace {

Rational weight_product(const Partition& lam, const std::vector<Rational>& x) {
  Rational prod = 1;
  for (long long p : lam.parts()) {
    if (p > static_cast<long long>(x.size()))
      throw std::invalid_argument("cycle index: weight vector too short");
    prod *= x[static_cast<std::size_t>(p) - 1];
  }
  return prod;
}

}  // namespace

Rational cycle_index_sum(int n, const std::vector<Rational>& x) {
  Rational total = 0;
  for_each_partition(n, [&](const Partition& lam) {
    total += weight_product(lam, x) /
             Rational(z_lambda(lam) *
                      ipow(BigInt(2), static_cast<unsigned>(lam.num_parts())));
  });
  return total;
}

Rational brute_cycle_average(int n, const std::vector<Rational>& x) {
  Rational total = 0;
  for_each_permutation(2 * n, [&](const Permutation& sigma) {
    total += weight_product(coset_partition(sigma), x);
  });
  return total / Rational(factorial(2 * n));
}

Rational nb_weight(int n, const Rational& t) {
  if (t <= 0 || t >= 1) throw std::domain_error("nb_weight: t in (0,1) required");
  return Rational(binomial(2 * n, n)) * rpow(t, n) /
         Rational(ipow(BigInt(4), static_cast<unsigned>(n)));
}

PoissonizedDraw poissonization_sample(const Rational& t, Rng& rng) {
  if (t <= 0 || t >= 1)
    throw std::domain_error("poissonization_sample: t in (0,1) required");
  // Inverse CDF for the NB(1/2, 1-t) size. The CDF is sqrt(1-t) S_n with
  // S_n the partial sum of nb_weight; compare squares to stay rational.
  const Rational one_minus_t = Rational(1) - t;
  const Rational u = uniform_unit_rational(rng);
  const Rational u2 = u * u;
  Rational s = 0;
  int n = 0;
  for (;; ++n) {
    s += nb_weight(n, t);
    if (one_minus_t * s * s >= u2) break;
    // Truncation guard: stop once the omitted mass is below 1e-12.
    if (n > 64 && Rational(1) - one_minus_t * s * s < Rational(1, BigInt(1000000000000LL)))
      break;
  }
  PoissonizedDraw draw;
  draw.n = n;
  if (n == 0) return draw;
  std::vector<int> word(2 * n);
  std::iota(word.begin(), word.end(), 1);
  std::shuffle(word.begin(), word.end(), rng);
  const Partition lam = coset_partition(Permutation(std::move(word)));
  draw.a.assign(static_cast<std::size_t>(n), 0);
  for (long long p : lam.parts()) ++draw.a[static_cast<std::size_t>(p) - 1];
  return draw;
}

}  // namespace cosetlab
