#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cosetlab/bruhat.hpp"
#include "cosetlab/ctab.hpp"
#include "cosetlab/group_oracle.hpp"
#include "cosetlab/hyperoct.hpp"
#include "cosetlab/mallows.hpp"

using namespace cosetlab;

TEST_CASE("group construction is verified") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK_THROWS(SmallGroup<Permutation>(
      {Permutation::identity(2), Permutation::identity(2)},
      Permutation::identity(2)));  // duplicate
  CHECK_THROWS(SmallGroup<Permutation>(
      {Permutation::parse("21")}, Permutation::parse("21")));  // no identity elt
  CHECK_THROWS(SmallGroup<Permutation>(
      {Permutation::identity(3), Permutation::parse("231")},
      Permutation::identity(3)));  // not closed
}

TEST_CASE("subgroup recognition") {
  const auto g = symmetric_group(4);
  CHECK(g.is_subgroup(parabolic_subgroup({2, 2})));
  CHECK(g.is_subgroup(centrally_symmetric_group(2)));
  CHECK(g.is_subgroup(matching_group(2)));
  CHECK_FALSE(g.is_subgroup({Permutation::parse("2134")}));  // no identity
  CHECK_FALSE(g.is_subgroup(
      {Permutation::identity(4), Permutation::parse("2314")}));  // not closed
  CHECK(parabolic_subgroup({1, 2}).size() == 2);
  CHECK(parabolic_subgroup({3, 2}).size() == 12);
}

TEST_CASE("degenerate coset decompositions") {
  const auto g = symmetric_group(3);
  // H = K = G: a single coset covering everything.
  const auto whole = g.double_cosets(g.elements(), g.elements());
  CHECK(whole.size() == 1);
  CHECK(whole[0].size() == 6);
  // H = K = {id}: every element its own coset.
  const std::vector<Permutation> trivial{Permutation::identity(3)};
  CHECK(g.double_cosets(trivial, trivial).size() == 6);
  CHECK_THROWS(g.double_cosets({Permutation::parse("213")}, trivial));
}

TEST_CASE("hyperoctahedral cosets of S_4 have sizes 8 and 16") {
  const auto g = symmetric_group(4);
  for (const auto& b2 : {centrally_symmetric_group(2), matching_group(2)}) {
    const auto cosets = g.double_cosets(b2, b2);
    std::multiset<std::size_t> sizes;
    for (const auto& c : cosets) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{8, 16});
  }
}

TEST_CASE("identities hold across the three families") {
  const auto s4 = symmetric_group(4);
  const auto s5 = symmetric_group(5);
  const std::vector<std::pair<std::vector<Permutation>, std::vector<Permutation>>>
      perm_cases{
          {parabolic_subgroup({2, 2}), parabolic_subgroup({3, 1})},
          {centrally_symmetric_group(2), centrally_symmetric_group(2)},
      };
  for (const auto& [h, k] : perm_cases) {
    const auto report = s4.verify_identities(h, k);
    CHECK(report.intersection_formula);
    CHECK(report.coset_sum);
    CHECK(report.fixed_point_count);
  }
  const auto report5 =
      s5.verify_identities(parabolic_subgroup({3, 2}), parabolic_subgroup({2, 2, 1}));
  CHECK(report5.intersection_formula);
  CHECK(report5.coset_sum);
  CHECK(report5.fixed_point_count);
  CHECK(report5.num_cosets == 5);
}

TEST_CASE("matrix group: borel cosets of GL_2(F_2) induce the mallows law") {
  const FieldPtr f = FqField::make(2);
  std::vector<FqMatrix> gl;
  for_each_gl(2, 2, [&](const FqMatrix& m) { gl.push_back(m); });
  const SmallGroup<FqMatrix> g(gl, FqMatrix::identity(f, 2));
  std::vector<FqMatrix> borel;
  for (const FqMatrix& m : gl)
    if (m.is_lower_triangular()) borel.push_back(m);
  CHECK(borel.size() == 2);  // unit diagonal forced, one free lower entry
  CHECK(g.is_subgroup(borel));

  const auto report = g.verify_identities(borel, borel);
  CHECK(report.intersection_formula);
  CHECK(report.coset_sum);
  CHECK(report.fixed_point_count);

  const auto induced = g.induced_distribution<Permutation>(
      borel, borel, [](const FqMatrix& m) { return bruhat_cell(m); });
  const MallowsModel model(2, 2);
  CHECK(induced.size() == 2);
  for (const auto& [w, mass] : induced)
    CHECK(mass == mallows_pmf(model, w).value());
}

TEST_CASE("parabolic cosets of S_5 induce the fisher yates law") {
  const auto g = symmetric_group(5);
  const MarginSpec margins(Partition({3, 2}), Partition({2, 2, 1}));
  // Left factor: the column-margin (value-block) parabolic; right factor:
  // the row-margin (position-block) parabolic. That order leaves the table
  // of each coset element unchanged.
  const auto induced = g.induced_distribution<ContingencyTable>(
      parabolic_subgroup({2, 2, 1}), parabolic_subgroup({3, 2}),
      [&](const Permutation& w) { return table_of_permutation(w, margins); });
  CHECK(induced.size() == 5);
  for (const auto& [t, mass] : induced)
    CHECK(mass == fisher_yates_pmf(t).value());
}

TEST_CASE("hyperoctahedral cosets of S_6 induce the ewens half law") {
  const auto g = symmetric_group(6);
  const auto b3 = matching_group(3);
  const auto induced = g.induced_distribution<Partition>(
      b3, b3, [](const Permutation& w) { return coset_partition(w); });
  const EwensModel model(3, Rational(1, 2));
  CHECK(induced.size() == all_partitions(3).size());
  for (const auto& [lam, mass] : induced)
    CHECK(mass == ewens_pmf(model, lam).value());
}
