#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cosetlab/limits.hpp"
#include "cosetlab/partition.hpp"

namespace cosetlab {

// Permutation in one-line notation: word[i-1] = omega(i), values 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);  // validates bijection

  static Permutation identity(int n);
  static Permutation reversal(int n);  // n, n-1, ..., 1

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  // Left-right flip of the word, e.g. R(31542) = 24513.
  Permutation reversed() const;
  // (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  // Default implementation: O(n log n) merge count.
  long long inversions() const;
  // Independent O(n^2) double loop, kept as the cross-check route.
  long long inversions_quadratic() const;

  std::vector<int> descent_set() const;  // positions i with w(i+1) < w(i)
  int descent_count() const;

  Partition cycle_type() const;
  int cycle_count() const;

  std::string to_string() const;
  // Accepts "321" (all entries single digit) or "10,2,1,..." forms.
  static Permutation parse(const std::string& s);

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> word_;
};

// All n! permutations in lexicographic order. Throws past the configured cap
// with a message pointing at the Monte Carlo path.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          const EnumLimits& limits = kDefaultLimits);

}  // namespace cosetlab

template <>
struct std::hash<cosetlab::Permutation> {
  std::size_t operator()(const cosetlab::Permutation& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : p.word()) h = h * 1099511628211ull + static_cast<std::size_t>(v);
    return h;
  }
};
