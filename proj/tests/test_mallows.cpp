#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "cosetlab/mallows.hpp"
#include "cosetlab/statlab.hpp"
#include "cosetlab/thresholds.hpp"

using namespace cosetlab;

TEST_CASE("pmf values and normalization") {
  const MallowsModel m(3, 2);
  // [3]_2! = 21; identity has 0 inversions, reversal 3.
  CHECK(mallows_pmf(m, Permutation::identity(3)).value() == Rational(1, 21));
  CHECK(mallows_pmf(m, Permutation::reversal(3)).value() == Rational(8, 21));
  for (int q : {2, 3, 5}) {
    const MallowsModel model(5, q);
    Rational total = 0;
    for_each_permutation(5, [&](const Permutation& w) {
      total += mallows_pmf(model, w).value();
    });
    CHECK(total == 1);
  }
  CHECK_THROWS(MallowsModel(4, 1));
}

TEST_CASE("inversion distribution matches brute enumeration") {
  const MallowsModel m(6, 3);
  const auto dist = inversion_distribution(m);
  CHECK(dist.size() == 16);  // C(6,2) + 1
  std::vector<Rational> brute(16, 0);
  for_each_permutation(6, [&](const Permutation& w) {
    brute[static_cast<std::size_t>(w.inversions())] += mallows_pmf(m, w).value();
  });
  CHECK(dist == brute);
  Rational total = 0;
  for (const auto& p : dist) total += p;
  CHECK(total == 1);
}

TEST_CASE("sampler follows the exact law on S_4") {
  const MallowsModel m(4, 2);
  std::map<Permutation, int> index;
  std::vector<double> probs;
  for_each_permutation(4, [&](const Permutation& w) {
    index.emplace(w, static_cast<int>(probs.size()));
    probs.push_back(mallows_pmf(m, w).to_double());
  });
  Rng rng(2024);
  std::vector<long long> counts(probs.size(), 0);
  const int draws = 40000;
  for (int i = 0; i < draws; ++i) ++counts[static_cast<std::size_t>(
      index.at(mallows_sample(m, rng)))];
  const GofResult gof = chi2_gof(counts, probs);
  CHECK(gof.p_value > thresholds::kMinPValue);
}

TEST_CASE("largest cell mass: two algebraic forms agree") {
  for (int q : {2, 3, 4, 5})
    for (int n : {2, 3, 6, 10}) {
      CHECK(reversal_cell_mass(n, q) == reversal_cell_mass_product_form(n, q));
      // and it really is the pmf of the reversal permutation
      CHECK(reversal_cell_mass(n, q) ==
            mallows_pmf(MallowsModel(n, q), Permutation::reversal(n)).value());
    }
}

TEST_CASE("descent subset probability vs enumeration") {
  const MallowsModel m(6, 2);
  for (const std::vector<int>& s :
       {std::vector<int>{}, {2}, {1, 3}, {2, 4, 5}, {1, 2, 3, 4, 5}}) {
    Rational brute = 0;
    for_each_permutation(6, [&](const Permutation& w) {
      const auto d = w.descent_set();
      bool contains = true;
      for (int pos : s)
        if (std::find(d.begin(), d.end(), pos) == d.end()) contains = false;
      if (contains) brute += mallows_pmf(m, w).value();
    });
    CHECK(descent_subset_prob(m, s).value() == brute);
  }
}

TEST_CASE("descent set determinant gives the exact-set law") {
  const MallowsModel m(5, 3);
  Rational total = 0;
  // Sum over all 2^{n-1} subsets must be 1, and each term must match brute force.
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= 4; ++i)
      if (mask & (1 << (i - 1))) s.push_back(i);
    const Rational det_prob = descent_set_exact_prob(m, s).value();
    Rational brute = 0;
    for_each_permutation(5, [&](const Permutation& w) {
      if (w.descent_set() == s) brute += mallows_pmf(m, w).value();
    });
    CHECK(det_prob == brute);
    total += det_prob;
  }
  CHECK(total == 1);
}

TEST_CASE("descent run probability") {
  // k descents in a row at fixed consecutive positions: q^{C(k+1,2)}/[k+1]_q!.
  const MallowsModel m(6, 2);
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> run;
    for (int i = 2; i < 2 + k; ++i) run.push_back(i);
    CHECK(descent_run_prob(k, 2).value() == descent_subset_prob(m, run).value());
  }
  CHECK(descent_run_prob(1, 2).value() == Rational(2, 3));  // q/(q+1)
}

TEST_CASE("descent moments: mean exact, variance from one-dependence") {
  const MallowsModel m(7, 2);
  Rational mean = 0, second = 0;
  for_each_permutation(7, [&](const Permutation& w) {
    const Rational p = mallows_pmf(m, w).value();
    mean += p * w.descent_count();
    second += p * w.descent_count() * w.descent_count();
  });
  CHECK(descent_moments(m).mean == mean);
  CHECK(descent_moments(m).mean == Rational(2 * 6, 3));  // q(n-1)/(q+1)
  CHECK(descent_variance_exact(m) == second - mean * mean);
}

TEST_CASE("clt parameters") {
  const auto params = inversion_clt_params(MallowsModel(10, 2));
  CHECK(params.center == doctest::Approx(45.0 - 9.0));
  CHECK(params.scale == doctest::Approx(std::sqrt(18.0)));
}
