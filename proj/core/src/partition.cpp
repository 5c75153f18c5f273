#include "cosetlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cosetlab {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::ones(int n) {
  return Partition(std::vector<long long>(n, 1));
}

Partition Partition::single(int n) {
  if (n == 0) return Partition();
  return Partition({n});
}

std::vector<long long> Partition::multiplicities() const {
  std::vector<long long> a(static_cast<std::size_t>(n_) + 1, 0);
  for (long long p : parts_) ++a[static_cast<std::size_t>(p)];
  return a;
}

BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  const auto a = lambda.multiplicities();
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    z *= ipow(BigInt(i), static_cast<unsigned>(a[i]));
    for (long long k = 2; k <= a[i]; ++k) z *= k;
  }
  return z;
}

MajorizationOrder majorizes(std::vector<long long> a, std::vector<long long> b) {
  const long long sa = std::accumulate(a.begin(), a.end(), 0LL);
  const long long sb = std::accumulate(b.begin(), b.end(), 0LL);
  if (sa != sb) throw std::invalid_argument("majorizes: sums differ");
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  const std::size_t m = std::max(a.size(), b.size());
  a.resize(m, 0);
  b.resize(m, 0);
  bool a_ge = true, b_ge = true;  // prefix-sum dominance in each direction
  long long pa = 0, pb = 0;
  for (std::size_t i = 0; i < m; ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) a_ge = false;
    if (pb < pa) b_ge = false;
  }
  if (a_ge && b_ge) return MajorizationOrder::Equal;
  if (a_ge) return MajorizationOrder::Greater;
  if (b_ge) return MajorizationOrder::Less;
  return MajorizationOrder::Incomparable;
}

namespace {

void partitions_rec(int remaining, long long max_part, std::vector<long long>& acc,
                    const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(acc));
    return;
  }
  for (long long p = std::min<long long>(max_part, remaining); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - static_cast<int>(p), p, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_partition: n < 0");
  std::vector<long long> acc;
  partitions_rec(n, n == 0 ? 1 : n, acc, fn);
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace cosetlab
