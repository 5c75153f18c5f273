#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cosetlab/statlab.hpp"

using namespace cosetlab;

TEST_CASE("chi squared survival function reference values") {
  // Classical critical values.
  CHECK(chi_squared_sf(3.841, 1) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(chi_squared_sf(5.991, 2) == doctest::Approx(0.05).epsilon(1e-3));
  CHECK(chi_squared_sf(16.919, 9) == doctest::Approx(0.05).epsilon(1e-3));
  // k = 2 is exponential: sf(x) = exp(-x/2).
  for (double x : {0.5, 1.0, 3.0, 10.0})
    CHECK(chi_squared_sf(x, 2) == doctest::Approx(std::exp(-x / 2)).epsilon(1e-10));
  CHECK(chi_squared_sf(0.0, 5) == doctest::Approx(1.0));
}

TEST_CASE("regularized gamma basics") {
  CHECK(regularized_gamma_p(1.0, 1.0) == doctest::Approx(1 - std::exp(-1.0)));
  CHECK(regularized_gamma_p(0.5, 0.0) == doctest::Approx(0.0));
  // P + sf = 1 across the series/continued-fraction switch at x = a + 1.
  for (double a : {0.5, 2.0, 7.5})
    for (double x : {0.1, a, a + 0.99, a + 1.01, 5 * a})
      CHECK(regularized_gamma_p(a, x) + chi_squared_sf(2 * x, 2 * a) ==
            doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("chi squared mean and variance by numerical integration") {
  const double k = 5.0;
  double mean = 0, second = 0;
  const double dx = 1e-3;
  for (double x = dx / 2; x < 200; x += dx) {
    const double density =
        (chi_squared_sf(x - dx / 2, k) - chi_squared_sf(x + dx / 2, k)) / dx;
    mean += x * density * dx;
    second += x * x * density * dx;
  }
  CHECK(mean == doctest::Approx(k).epsilon(1e-4));
  CHECK(second - mean * mean == doctest::Approx(2 * k).epsilon(1e-3));
}

TEST_CASE("goodness of fit on exactly proportional counts") {
  const GofResult r = chi2_gof({50, 30, 20}, {0.5, 0.3, 0.2});
  CHECK(r.statistic == doctest::Approx(0.0));
  CHECK(r.dof == 2);
  CHECK(r.p_value == doctest::Approx(1.0));
  // Wildly off counts give a p-value of essentially zero.
  CHECK(chi2_gof({100, 0, 0}, {0.1, 0.45, 0.45}).p_value < 1e-12);
}

TEST_CASE("pooling keeps every expected count at or above five") {
  // 1000 draws but two cells with tiny expected mass: they must be pooled.
  const GofResult r =
      chi2_gof({996, 2, 1, 1}, {0.994, 0.002, 0.002, 0.002});
  CHECK(r.pooled_cells == 2);
  CHECK(r.dof == 1);
  CHECK(r.p_value > 0.01);
}

TEST_CASE("total variation distance") {
  CHECK(tv_distance({50, 50}, {0.5, 0.5}) == doctest::Approx(0.0));
  CHECK(tv_distance({100, 0}, {0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(tv_distance({75, 25}, {0.5, 0.5}) == doctest::Approx(0.25));
  // Reference mass on labels never observed adds to the distance.
  CHECK(tv_distance({100}, {0.9}, 0.1) == doctest::Approx(0.1));
}

TEST_CASE("kolmogorov smirnov statistic") {
  // Empirical {0.25, 0.75} against Uniform(0,1): sup distance is 1/4.
  CHECK(ks_statistic({0.25, 0.75}, [](double x) { return x; }) ==
        doctest::Approx(0.25));
  // A sample exactly at the uniform quantile midpoints is as close as
  // possible: distance 1/(2m).
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i) grid.push_back((i + 0.5) / 10);
  CHECK(ks_statistic(grid, [](double x) { return x; }) == doctest::Approx(0.05));
}

TEST_CASE("poisson pmf and normal cdf") {
  CHECK(poisson_pmf(0, 2.5) == doctest::Approx(std::exp(-2.5)));
  CHECK(poisson_pmf(3, 2.0) == doctest::Approx(std::exp(-2.0) * 8.0 / 6.0));
  double total = 0;
  for (long long k = 0; k <= 60; ++k) total += poisson_pmf(k, 7.0);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(normal_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-6));
  CHECK(normal_cdf(-1.959964) == doctest::Approx(0.025).epsilon(1e-4));
}

TEST_CASE("meta test: p values are roughly uniform under the null") {
  // 200 replications of a fair six-sided die, 600 rolls each; the resulting
  // p-values should look uniform on (0,1).
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> die(0, 5);
  std::vector<double> pvals;
  const std::vector<double> fair(6, 1.0 / 6);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<long long> counts(6, 0);
    for (int i = 0; i < 600; ++i) ++counts[static_cast<std::size_t>(die(rng))];
    pvals.push_back(chi2_gof(counts, fair).p_value);
  }
  CHECK(ks_statistic(pvals, [](double x) {
          return std::clamp(x, 0.0, 1.0);
        }) < 0.15);
  // And none of the replications should be implausibly extreme.
  CHECK(*std::min_element(pvals.begin(), pvals.end()) > 1e-6);
}
