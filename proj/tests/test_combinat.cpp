#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "cosetlab/numbers.hpp"
#include "cosetlab/partition.hpp"
#include "cosetlab/permutation.hpp"
#include "cosetlab/qanalog.hpp"
#include "cosetlab/rng.hpp"

using namespace cosetlab;

TEST_CASE("permutation construction and validation") {
  CHECK_THROWS(Permutation({1, 1, 3}));
  CHECK_THROWS(Permutation({0, 1, 2}));
  CHECK_THROWS(Permutation({2, 3, 4}));
  const Permutation p({3, 1, 2});
  CHECK(p(1) == 3);
  CHECK(p.inverse() == Permutation({2, 3, 1}));
  CHECK(p * p.inverse() == Permutation::identity(3));
  CHECK(Permutation::reversal(4) == Permutation({4, 3, 2, 1}));
}

TEST_CASE("parse and to_string round trip") {
  CHECK(Permutation::parse("31542") == Permutation({3, 1, 5, 4, 2}));
  CHECK(Permutation::parse("10,2,1,3,4,5,6,7,8,9").size() == 10);
  CHECK(Permutation::parse(Permutation({2, 1}).to_string()) == Permutation({2, 1}));
  CHECK_THROWS(Permutation::parse("3x1"));
}

TEST_CASE("inversions: merge count equals quadratic count") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> word(12);
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    const Permutation p(word);
    CHECK(p.inversions() == p.inversions_quadratic());
  }
  CHECK(Permutation::reversal(6).inversions() == 15);
  CHECK(Permutation::identity(6).inversions() == 0);
}

TEST_CASE("descents and reversal symmetry") {
  const Permutation p({3, 1, 5, 4, 2});
  CHECK(p.descent_set() == std::vector<int>{1, 3, 4});
  CHECK(p.descent_count() == 3);
  // R(31542) = 24513 from the word flip.
  CHECK(p.reversed() == Permutation({2, 4, 5, 1, 3}));
  // Flipping the word complements descents: I(w) + I(R(w)) = C(n,2).
  CHECK(p.inversions() + p.reversed().inversions() == 10);
}

TEST_CASE("cycle type") {
  CHECK(Permutation::identity(5).cycle_type() == Partition({1, 1, 1, 1, 1}));
  CHECK(Permutation({2, 3, 4, 5, 1}).cycle_type() == Partition({5}));
  CHECK(Permutation({2, 1, 4, 3, 5}).cycle_type() == Partition({2, 2, 1}));
  CHECK(Permutation({2, 1, 4, 3, 5}).cycle_count() == 3);
}

TEST_CASE("for_each_permutation enumerates n! distinct words") {
  std::set<Permutation> seen;
  for_each_permutation(5, [&](const Permutation& p) { seen.insert(p); });
  CHECK(seen.size() == 120);
  EnumLimits tight;
  tight.max_permutation_n = 4;
  CHECK_THROWS_AS(for_each_permutation(5, [](const Permutation&) {}, tight),
                  std::length_error);
}

TEST_CASE("partition basics") {
  CHECK_THROWS(Partition({2, 3}));
  CHECK_THROWS(Partition({2, 0}));
  const Partition lam({3, 2, 2, 1});
  CHECK(lam.n() == 8);
  CHECK(lam.num_parts() == 4);
  const auto mult = lam.multiplicities();
  CHECK(mult[1] == 1);
  CHECK(mult[2] == 2);
  CHECK(mult[3] == 1);
  CHECK(z_lambda(Partition({1, 1, 1})) == 6);  // n! for 1^n
  CHECK(z_lambda(Partition({5})) == 5);
  CHECK(z_lambda(Partition({2, 2, 1})) == 8);  // 2^2 2! * 1
}

TEST_CASE("partition counts p(n)") {
  CHECK(all_partitions(1).size() == 1);
  CHECK(all_partitions(5).size() == 7);
  CHECK(all_partitions(10).size() == 42);
  // sum over partitions of n!/z_lambda equals n! (class equation)
  BigInt total = 0;
  for (const Partition& lam : all_partitions(6)) total += factorial(6) / z_lambda(lam);
  CHECK(total == factorial(6));
}

TEST_CASE("majorization") {
  using MO = MajorizationOrder;
  CHECK(majorizes({4, 0, 0, 4}, {2, 2, 2, 2}) == MO::Greater);
  CHECK(majorizes({2, 2, 2, 2}, {3, 1, 1, 3}) == MO::Less);
  CHECK(majorizes({3, 3, 0}, {4, 1, 1}) == MO::Incomparable);
  CHECK(majorizes({2, 1}, {1, 2}) == MO::Equal);
  CHECK_THROWS(majorizes({1, 2}, {4}));
}

TEST_CASE("q analogs") {
  CHECK(q_int(0, 3) == 0);
  CHECK(q_int(4, 2) == 15);
  CHECK(q_factorial(3, 2) == 21);  // (1+2)(1+2+4)
  CHECK(q_factorial(3, 3) == 52);  // (1+3)(1+3+9)
  // Gaussian binomial [4 choose 2]_2 = 35
  CHECK(q_multinomial(4, {2, 2}, 2) == 35);
  // Mahonian coefficients for n=3: 1,2,2,1
  CHECK(mahonian_coefficients(3) == std::vector<BigInt>{1, 2, 2, 1});
  BigInt sum = 0;
  for (const BigInt& c : mahonian_coefficients(6)) sum += c;
  CHECK(sum == factorial(6));
}

TEST_CASE("exact probability type enforces range") {
  CHECK_THROWS(ExactProb(Rational(3, 2)));
  CHECK_THROWS(ExactProb(Rational(-1, 2)));
  CHECK(ExactProb(Rational(1, 3)).to_double() == doctest::Approx(1.0 / 3));
}

TEST_CASE("rational determinant") {
  CHECK(rational_det({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) ==
        Rational(-2));
  CHECK(rational_det({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) ==
        Rational(-1));
  CHECK(rational_det({{Rational(1, 2), Rational(1, 3)},
                      {Rational(1, 4), Rational(1, 5)}}) ==
        Rational(1, 60));
}

TEST_CASE("uniform big integer draws stay in range and hit all residues") {
  Rng rng(11);
  const BigInt bound = ipow(BigInt(2), 80) + 12345;
  std::set<int> low_bits;
  for (int i = 0; i < 200; ++i) {
    const BigInt v = uniform_bigint_below(rng, bound);
    CHECK(v >= 0);
    CHECK(v < bound);
    low_bits.insert(static_cast<int>(v % 8));
  }
  CHECK(low_bits.size() == 8);
  CHECK_THROWS(uniform_bigint_below(rng, BigInt(0)));
}
