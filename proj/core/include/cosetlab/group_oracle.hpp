#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cosetlab/fq_matrix.hpp"
#include "cosetlab/limits.hpp"
#include "cosetlab/numbers.hpp"
#include "cosetlab/permutation.hpp"

namespace cosetlab {

// Generic element interface so the brute-force machinery works for both
// permutations and invertible matrices.
inline Permutation group_compose(const Permutation& a, const Permutation& b) {
  return a * b;
}
inline Permutation group_inverse(const Permutation& a) { return a.inverse(); }
inline FqMatrix group_compose(const FqMatrix& a, const FqMatrix& b) { return a * b; }
inline FqMatrix group_inverse(const FqMatrix& a) { return a.inverse(); }

// A finite group given by its explicit element list. Closure, identity and
// inverses are verified at construction (closure on all pairs up to a work
// cap, on a deterministic subset beyond it).
template <class E>
class SmallGroup {
 public:
  SmallGroup(std::vector<E> elements, E identity,
             const EnumLimits& limits = kDefaultLimits)
      : elements_(std::move(elements)), identity_(std::move(identity)) {
    if (elements_.size() > limits.max_group_order)
      throw std::length_error("SmallGroup: order exceeds the configured cap");
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (!index_.emplace(elements_[i], static_cast<int>(i)).second)
        throw std::invalid_argument("SmallGroup: duplicate element");
    if (!index_.contains(identity_))
      throw std::invalid_argument("SmallGroup: identity not in element list");
    verify();
  }

  const std::vector<E>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const E& identity() const { return identity_; }
  bool contains(const E& e) const { return index_.contains(e); }
  int index_of(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::invalid_argument("SmallGroup: unknown element");
    return it->second;
  }

  bool is_subgroup(const std::vector<E>& h) const {
    if (h.empty()) return false;
    std::unordered_set<E> set(h.begin(), h.end());
    if (set.size() != h.size()) return false;
    if (!set.contains(identity_)) return false;
    for (const E& a : h) {
      if (!contains(a)) return false;
      if (!set.contains(group_inverse(a))) return false;
      for (const E& b : h)
        if (!set.contains(group_compose(a, b))) return false;
    }
    return true;
  }

  // Partition of the whole group into double cosets H s K, as index sets
  // into elements(), in order of first appearance.
  std::vector<std::vector<int>> double_cosets(const std::vector<E>& h,
                                              const std::vector<E>& k) const {
    require_subgroup(h, "H");
    require_subgroup(k, "K");
    std::vector<char> assigned(elements_.size(), 0);
    std::vector<std::vector<int>> cosets;
    for (std::size_t s = 0; s < elements_.size(); ++s) {
      if (assigned[s]) continue;
      std::vector<int> coset;
      for (const E& a : h)
        for (const E& b : k) {
          const int idx = index_of(group_compose(a, group_compose(elements_[s], b)));
          if (!assigned[idx]) {
            assigned[idx] = 1;
            coset.push_back(idx);
          }
        }
      std::sort(coset.begin(), coset.end());
      cosets.push_back(std::move(coset));
    }
    return cosets;
  }

  struct IdentityReport {
    bool intersection_formula = true;  // |HsK| = |H||K| / |H n sKs^-1|, both sides
    bool coset_sum = true;             // sum |HsK| / |H| = |G| / |H|
    bool fixed_point_count = true;     // |H\G/K| |H||K| = sum_{h,k} #{g: h^-1 g k = g}
    std::size_t num_cosets = 0;
  };

  IdentityReport verify_identities(const std::vector<E>& h,
                                   const std::vector<E>& k) const {
    const auto cosets = double_cosets(h, k);
    IdentityReport report;
    report.num_cosets = cosets.size();

    std::unordered_set<E> h_set(h.begin(), h.end());
    std::unordered_set<E> k_set(k.begin(), k.end());
    Rational coset_sum = 0;
    for (const auto& coset : cosets) {
      const E& s = elements_[static_cast<std::size_t>(coset.front())];
      const E s_inv = group_inverse(s);
      std::size_t h_cap = 0, k_cap = 0;
      for (const E& b : k)
        if (h_set.contains(group_compose(s, group_compose(b, s_inv)))) ++h_cap;
      for (const E& a : h)
        if (k_set.contains(group_compose(s_inv, group_compose(a, s)))) ++k_cap;
      const BigInt hk = BigInt(h.size()) * k.size();
      if (BigInt(coset.size()) * h_cap != hk || BigInt(coset.size()) * k_cap != hk)
        report.intersection_formula = false;
      coset_sum += Rational(coset.size(), h.size());
    }
    if (coset_sum != Rational(elements_.size(), h.size()))
      report.coset_sum = false;

    BigInt fixed = 0;
    for (const E& a : h) {
      const E a_inv = group_inverse(a);
      for (const E& b : k)
        for (const E& g : elements_)
          if (group_compose(a_inv, group_compose(g, b)) == g) ++fixed;
    }
    if (fixed != BigInt(cosets.size()) * h.size() * k.size())
      report.fixed_point_count = false;
    return report;
  }

  // Exact mass of each label under the distribution a uniform group element
  // induces on double cosets; the labeler reads any coset representative.
  template <class Label>
  std::map<Label, Rational> induced_distribution(
      const std::vector<E>& h, const std::vector<E>& k,
      const std::function<Label(const E&)>& labeler) const {
    std::map<Label, Rational> out;
    for (const auto& coset : double_cosets(h, k))
      out[labeler(elements_[static_cast<std::size_t>(coset.front())])] +=
          Rational(coset.size(), elements_.size());
    return out;
  }

 private:
  void require_subgroup(const std::vector<E>& h, const char* name) const {
    if (!is_subgroup(h))
      throw std::invalid_argument(std::string("SmallGroup: ") + name +
                                  " is not a subgroup");
  }

  void verify() const {
    // Inverses and the identity law for every element; closure over all
    // pairs when affordable, else over a deterministic stride.
    for (const E& a : elements_) {
      if (!contains(group_inverse(a)))
        throw std::invalid_argument("SmallGroup: missing inverse");
      if (!(group_compose(a, identity_) == a))
        throw std::invalid_argument("SmallGroup: identity law fails");
    }
    const std::size_t n = elements_.size();
    const std::size_t pair_budget = 4'000'000;
    const std::size_t stride =
        n * n <= pair_budget ? 1 : std::max<std::size_t>(2, n * n / pair_budget);
    std::size_t counter = 0;
    for (const E& a : elements_)
      for (const E& b : elements_) {
        if (counter++ % stride != 0) continue;
        if (!contains(group_compose(a, b)))
          throw std::invalid_argument("SmallGroup: not closed under composition");
      }
  }

  std::vector<E> elements_;
  E identity_;
  std::unordered_map<E, int> index_;
};

// All n! permutations as an explicit group.
SmallGroup<Permutation> symmetric_group(int n,
                                        const EnumLimits& limits = kDefaultLimits);

// The parabolic (Young) subgroup permuting consecutive position blocks of
// the given sizes. Takes a composition: any positive block sizes, any order.
std::vector<Permutation> parabolic_subgroup(const std::vector<long long>& blocks);

}  // namespace cosetlab
