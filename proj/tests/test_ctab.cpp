#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "cosetlab/ctab.hpp"
#include "cosetlab/group_oracle.hpp"
#include "cosetlab/statlab.hpp"
#include "cosetlab/thresholds.hpp"

using namespace cosetlab;

namespace {
const MarginSpec kSmall{Partition({3, 2}), Partition({2, 2, 1})};
}

TEST_CASE("margin and table validation") {
  CHECK_THROWS(MarginSpec(Partition({3, 2}), Partition({4})));  // unequal sums
  CHECK_THROWS(ContingencyTable(kSmall, {2, 1, 0, 0, 1, 0}));   // bad column sum
  CHECK_THROWS(ContingencyTable(kSmall, {2, 1, 0, 0, 1}));      // wrong length
  CHECK_THROWS(ContingencyTable(kSmall, {3, 1, -1, -1, 1, 2})); // negative
  const ContingencyTable t(kSmall, {2, 1, 0, 0, 1, 1});
  CHECK(t.at(0, 0) == 2);
  CHECK(t.zero_count() == 2);
}

TEST_CASE("table of a permutation: reference words") {
  // Identity word 12345: block values {1,2,3} / {4,5} cut at positions 2|2|1.
  const ContingencyTable t1 =
      table_of_permutation(Permutation::parse("12345"), kSmall);
  CHECK(t1.entries() == std::vector<long long>{2, 1, 0, 0, 1, 1});
  const ContingencyTable t2 =
      table_of_permutation(Permutation::parse("13524"), kSmall);
  CHECK(t2.entries() == std::vector<long long>{1, 1, 1, 1, 1, 0});
}

TEST_CASE("pmf sums to one over the fiber and matches S_n proportions") {
  for (const MarginSpec& m :
       {kSmall, MarginSpec(Partition({2, 2}), Partition({2, 1, 1})),
        MarginSpec(Partition({4, 3, 1}), Partition({3, 3, 2}))}) {
    Rational total = 0;
    for (const ContingencyTable& t : all_tables(m))
      total += fisher_yates_pmf(t).value();
    CHECK(total == 1);
  }
  // ct_coset_size counts the permutations mapping to each table.
  std::map<ContingencyTable, long long> counts;
  for_each_permutation(5, [&](const Permutation& w) {
    auto [it, fresh] = counts.try_emplace(table_of_permutation(w, kSmall), 0);
    ++it->second;
  });
  BigInt total = 0;
  for (const auto& [t, c] : counts) {
    CHECK(ct_coset_size(t) == c);
    total += c;
  }
  CHECK(total == 120);
}

TEST_CASE("enumeration counts") {
  CHECK(all_tables(kSmall).size() == 5);
  CHECK(all_tables(MarginSpec(Partition({2, 2}), Partition({2, 2}))).size() == 3);
  // Coset sizes for (2,2) x (2,2) margins: 4 + 16 + 4 = 24.
  BigInt total = 0;
  for (const ContingencyTable& t :
       all_tables(MarginSpec(Partition({2, 2}), Partition({2, 2}))))
    total += ct_coset_size(t);
  CHECK(total == 24);
  EnumLimits tight;
  tight.max_table_count = 2;
  CHECK_THROWS_AS(all_tables(kSmall, tight), std::length_error);
}

TEST_CASE("fy sampler: margins always exact, law matches the pmf") {
  Rng rng(55);
  std::map<ContingencyTable, int> index;
  std::vector<double> probs;
  for (const ContingencyTable& t : all_tables(kSmall)) {
    index.emplace(t, static_cast<int>(probs.size()));
    probs.push_back(fisher_yates_pmf(t).to_double());
  }
  std::vector<long long> counts(probs.size(), 0);
  const int draws = 30000;
  for (int i = 0; i < draws; ++i) {
    const ContingencyTable t = fy_sample(kSmall, rng);  // ctor revalidates margins
    ++counts[static_cast<std::size_t>(index.at(t))];
  }
  CHECK(chi2_gof(counts, probs).p_value > thresholds::kMinPValue);
}

TEST_CASE("corner entry is hypergeometric for (4,4) x (4,4)") {
  const MarginSpec m(Partition({4, 4}), Partition({4, 4}));
  // P(T_00 = k) = C(4,k) C(4,4-k) / C(8,4).
  for (const ContingencyTable& t : all_tables(m)) {
    const long long k = t.at(0, 0);
    CHECK(fisher_yates_pmf(t).value() ==
          Rational(binomial(4, static_cast<int>(k)) *
                       binomial(4, static_cast<int>(4 - k)),
                   binomial(8, 4)));
  }
}

TEST_CASE("pmf is a two-sided coset invariant") {
  // sigma maps positions to values, so the value-block (column-margin)
  // parabolic acts on the left and the position-block (row-margin) parabolic
  // on the right.
  Rng rng(21);
  const auto h = parabolic_subgroup({2, 2, 1});
  const auto k = parabolic_subgroup({3, 2});
  std::vector<int> word(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    const Permutation sigma(word);
    const ContingencyTable t = table_of_permutation(sigma, kSmall);
    const Permutation& a = h[uniform_u64_below(rng, h.size())];
    const Permutation& b = k[uniform_u64_below(rng, k.size())];
    CHECK(table_of_permutation(a * sigma * b, kSmall) == t);
  }
}

TEST_CASE("chi squared and l1 distance") {
  const MarginSpec m(Partition({4, 4}), Partition({4, 4}));
  const ContingencyTable balanced(m, {2, 2, 2, 2});
  CHECK(chi2_stat(balanced) == doctest::Approx(0.0));
  CHECK(l1_to_independence(balanced) == doctest::Approx(0.0));
  for (const ContingencyTable& t : all_tables(m)) {
    CHECK(l1_to_independence(t) <=
          std::sqrt(static_cast<double>(t.n()) * chi2_stat(t)) + 1e-12);
  }
  const auto star = independence_table(kSmall);
  CHECK(star[0] == doctest::Approx(6.0 / 5));  // 3 * 2 / 5
  CHECK(star[5] == doctest::Approx(2.0 / 5));  // 2 * 1 / 5
}

TEST_CASE("minimal length representatives") {
  // The representative of a table reproduces the table and minimizes length
  // within its coset (checked exhaustively on S_5).
  std::map<ContingencyTable, long long> min_inv;
  for_each_permutation(5, [&](const Permutation& w) {
    auto [it, fresh] =
        min_inv.try_emplace(table_of_permutation(w, kSmall), w.inversions());
    if (!fresh) it->second = std::min(it->second, w.inversions());
  });
  for (const ContingencyTable& t : all_tables(kSmall)) {
    const Permutation rep = min_length_rep(t);
    CHECK(table_of_permutation(rep, kSmall) == t);
    CHECK(rep.inversions() == min_inv.at(t));
  }
  CHECK(min_length_rep(ContingencyTable(kSmall, {1, 1, 1, 1, 1, 0})) ==
        Permutation::parse("13524"));
}

TEST_CASE("majorization of tables and the schur property") {
  const MarginSpec m(Partition({4, 4}), Partition({4, 4}));
  const auto tables = all_tables(m);
  for (const ContingencyTable& a : tables)
    for (const ContingencyTable& b : tables) CHECK(schur_check(a, b));
  const ContingencyTable flat(m, {2, 2, 2, 2});
  const ContingencyTable spiky(m, {4, 0, 0, 4});
  CHECK(prec_compare(flat, spiky) == MajorizationOrder::Less);
  CHECK(fisher_yates_pmf(flat).value() > fisher_yates_pmf(spiky).value());
}

TEST_CASE("covariance model") {
  const MarginSpec m(Partition({4, 4}), Partition({4, 4}));
  const CovModel model = CovModel::of(m);
  CHECK(model.alpha == std::vector<double>{0.5, 0.5});
  const auto cov = clt_covariance(model);
  CHECK(cov.size() == 16);
  // (Diag(a) - aa^T) has entries +-1/4, so the Kronecker square is a +-1/16
  // checkerboard.
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const int i1 = r / 2, j1 = r % 2, i2 = c / 2, j2 = c % 2;
      const double sign = ((i1 == i2) == (j1 == j2)) ? 1.0 : -1.0;
      CHECK(cov[static_cast<std::size_t>(r) * 4 + c] ==
            doctest::Approx(sign / 16));
    }
  CHECK_THROWS(CovModel({0.5, 0.5}, {1.0, 0.0}));  // beta entry not in (0,1)
}

TEST_CASE("coset size approximation tracks the exact size at desk scale") {
  const MarginSpec m(Partition({30, 30}), Partition({30, 30}));
  const CovModel model = CovModel::of(m);
  const ContingencyTable modal(m, {15, 15, 15, 15});
  const double exact = ct_coset_size(modal).convert_to<double>();
  const double approx = coset_size_approx(modal, model);
  CHECK(std::abs(approx / exact - 1.0) < thresholds::kApproxRatioWindow);
}

TEST_CASE("zeros experiment on a fully enumerable case") {
  // (4,4) x (4,4): the exact zero-count law follows from the five tables.
  const MarginSpec m(Partition({4, 4}), Partition({4, 4}));
  std::map<long long, Rational> exact;
  for (const ContingencyTable& t : all_tables(m))
    exact[t.zero_count()] += fisher_yates_pmf(t).value();
  const ZerosResult res = zeros_experiment(2, 4, {4, 4}, 40000, 2026, 4);
  long long total = 0;
  for (const auto& [z, c] : res.histogram) total += c;
  CHECK(total == 40000);
  for (const auto& [z, p] : exact) {
    const double phat =
        static_cast<double>(res.histogram.count(z) ? res.histogram.at(z) : 0) /
        40000;
    CHECK(phat == doctest::Approx(p.convert_to<double>()).epsilon(0.05));
  }
  // Sharded runs are reproducible for a fixed seed and worker count.
  const ZerosResult res2 = zeros_experiment(2, 4, {4, 4}, 40000, 2026, 4);
  CHECK(res2.histogram == res.histogram);
  CHECK(res2.mean == doctest::Approx(res.mean));
}
