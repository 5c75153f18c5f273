#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "cosetlab/bruhat.hpp"
#include "cosetlab/fq.hpp"
#include "cosetlab/fq_matrix.hpp"
#include "cosetlab/mallows.hpp"
#include "cosetlab/statlab.hpp"
#include "cosetlab/thresholds.hpp"

using namespace cosetlab;

TEST_CASE("field construction for every prime power up to 64") {
  // FqField::make verifies the axioms internally; construction must succeed
  // exactly for prime powers.
  int built = 0;
  for (int q = 2; q <= 64; ++q) {
    if (is_prime_power(q)) {
      const FieldPtr f = FqField::make(q);
      CHECK(f->q() == q);
      ++built;
    } else {
      CHECK_THROWS(FqField::make(q));
    }
  }
  CHECK(built == 27);  // prime powers in [2, 64]: 18 primes + 9 higher powers
}

TEST_CASE("field arithmetic spot checks") {
  const FieldPtr f4 = FqField::make(4);
  // Characteristic 2: every element is its own negative.
  for (int a = 0; a < 4; ++a) CHECK(f4->add(a, a) == 0);
  // x * x = x + 1 under x^2 + x + 1 (codes: 2 = x, 3 = x + 1).
  CHECK(f4->mul(2, 2) == 3);
  for (int a = 1; a < 4; ++a) CHECK(f4->mul(a, f4->inv(a)) == 1);

  const FieldPtr f7 = FqField::make(7);
  CHECK(f7->mul(3, 5) == 1);
  CHECK(f7->inv(3) == 5);
  CHECK(f7->sub(2, 5) == 4);
}

TEST_CASE("matrix inverse and product") {
  const FieldPtr f = FqField::make(5);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [m, attempts] = sample_uniform_rejection(4, 5, rng);
    const FqMatrix inv = m.inverse();
    CHECK(m * inv == FqMatrix::identity(f, 4));
    CHECK(inv * m == FqMatrix::identity(f, 4));
  }
  FqMatrix singular(f, 2, {1, 2, 2, 4});  // second row = 2 * first row
  CHECK_FALSE(singular.is_invertible());
  CHECK_THROWS_AS(singular.inverse(), std::domain_error);
  CHECK_THROWS_AS(bruhat_decompose(singular), std::domain_error);
}

TEST_CASE("bruhat decomposition on special matrices") {
  const FieldPtr f = FqField::make(3);
  CHECK(bruhat_cell(FqMatrix::identity(f, 4)) == Permutation::identity(4));
  for_each_permutation(4, [&](const Permutation& w) {
    CHECK(bruhat_cell(FqMatrix::permutation_matrix(f, w)) == w);
  });
  // Any invertible lower triangular matrix sits in the identity cell.
  Rng rng(5);
  CHECK(bruhat_cell(random_borel(f, 5, rng)) == Permutation::identity(5));
}

TEST_CASE("decomposition reconstructs the matrix") {
  Rng rng(17);
  for (int q : {2, 3, 4}) {
    const FieldPtr f = FqField::make(q);
    for (int trial = 0; trial < 25; ++trial) {
      const FqMatrix m = sample_uniform_rejection(5, q, rng).matrix;
      const BruhatFactorization bf = bruhat_decompose(m);
      CHECK(bf.b1.is_lower_triangular());
      CHECK(bf.b2.is_lower_triangular());
      CHECK(bf.b1.is_invertible());
      CHECK(bf.b2.is_invertible());
      CHECK(bf.b1 * FqMatrix::permutation_matrix(f, bf.cell) * bf.b2 == m);
    }
  }
}

TEST_CASE("cell is a two-sided Borel invariant") {
  Rng rng(29);
  const FieldPtr f = FqField::make(4);
  for (int trial = 0; trial < 25; ++trial) {
    const FqMatrix m = sample_uniform_rejection(4, 4, rng).matrix;
    const Permutation w = bruhat_cell(m);
    const FqMatrix b1 = random_borel(f, 4, rng);
    const FqMatrix b2 = random_borel(f, 4, rng);
    CHECK(bruhat_cell(b1 * m * b2) == w);
  }
}

TEST_CASE("orders and cell sizes") {
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(3, 2) == 168);
  CHECK(borel_order(3, 2) == 8);
  // Cells partition the group: sum of |B| q^{I(w)} over S_n equals |GL_n|.
  for (int q : {2, 3}) {
    BigInt total = 0;
    for_each_permutation(4, [&](const Permutation& w) {
      total += bruhat_cell_size(4, q, w);
    });
    CHECK(total == gl_order(4, q));
  }
}

TEST_CASE("enumeration hits every invertible matrix exactly once") {
  std::set<std::vector<std::uint8_t>> seen;
  for_each_gl(2, 3, [&](const FqMatrix& m) {
    CHECK(m.is_invertible());
    CHECK(seen.insert(m.entries()).second);
  });
  CHECK(BigInt(seen.size()) == gl_order(2, 3));
  long long count = 0;
  for_each_gl(3, 3, [&](const FqMatrix&) { ++count; });
  CHECK(BigInt(count) == gl_order(3, 3));  // 11232
  EnumLimits tight;
  tight.max_group_order = 100;
  CHECK_THROWS_AS(for_each_gl(3, 3, [](const FqMatrix&) {}, tight),
                  std::length_error);
}

TEST_CASE("both uniform samplers agree with the uniform law on GL_2(F_3)") {
  std::map<std::vector<std::uint8_t>, int> index;
  for_each_gl(2, 3, [&](const FqMatrix& m) {
    const int id = static_cast<int>(index.size());
    index.emplace(m.entries(), id);
  });
  const int order = static_cast<int>(index.size());
  const std::vector<double> probs(order, 1.0 / order);
  const int draws = 24000;

  Rng rng(99);
  std::vector<long long> pak_counts(order, 0), rej_counts(order, 0);
  double attempt_sum = 0;
  for (int i = 0; i < draws; ++i) {
    ++pak_counts[static_cast<std::size_t>(
        index.at(sample_uniform_pak(2, 3, rng).entries()))];
    const auto rs = sample_uniform_rejection(2, 3, rng);
    ++rej_counts[static_cast<std::size_t>(index.at(rs.matrix.entries()))];
    attempt_sum += rs.attempts;
  }
  CHECK(chi2_gof(pak_counts, probs).p_value > thresholds::kMinPValue);
  CHECK(chi2_gof(rej_counts, probs).p_value > thresholds::kMinPValue);
  // Mean attempts should track 1 / prod(1 - q^{-i}) = 27/16.
  const double expected =
      1.0 / gl_success_probability(2, 3).convert_to<double>();
  CHECK(attempt_sum / draws ==
        doctest::Approx(expected).epsilon(thresholds::kRejectionMeanRel));
}

TEST_CASE("cell frequencies of the pak sampler follow the mallows law") {
  Rng rng(41);
  const MallowsModel m(4, 2);
  std::map<Permutation, int> index;
  std::vector<double> probs;
  for_each_permutation(4, [&](const Permutation& w) {
    index.emplace(w, static_cast<int>(probs.size()));
    probs.push_back(mallows_pmf(m, w).to_double());
  });
  std::vector<long long> counts(probs.size(), 0);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i)
    ++counts[static_cast<std::size_t>(
        index.at(bruhat_cell(sample_uniform_pak(4, 2, rng))))];
  CHECK(chi2_gof(counts, probs).p_value > thresholds::kMinPValue);
}
