#pragma once

#include <functional>
#include <vector>

#include "cosetlab/limits.hpp"
#include "cosetlab/numbers.hpp"

namespace cosetlab {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts);

  static Partition ones(int n);   // 1^n
  static Partition single(int n); // (n)

  long long n() const { return n_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  const std::vector<long long>& parts() const { return parts_; }
  long long part(int i) const { return parts_.at(i); }  // 0-based
  bool empty() const { return parts_.empty(); }

  // a[i] = number of parts equal to i, for 1 <= i <= n. a[0] unused.
  std::vector<long long> multiplicities() const;

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) = default;

 private:
  std::vector<long long> parts_;
  long long n_ = 0;
};

// z_lambda = prod_i i^{a_i} a_i!  (centralizer order of the cycle type).
BigInt z_lambda(const Partition& lambda);

enum class MajorizationOrder { Equal, Less, Greater, Incomparable };

// Majorization comparison of two integer multisets with equal sums
// (sorted descending, zero-padded, prefix sums). Throws on unequal sums.
MajorizationOrder majorizes(std::vector<long long> a, std::vector<long long> b);

// All partitions of n, largest-part-first lexicographic order.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> all_partitions(int n);

}  // namespace cosetlab
