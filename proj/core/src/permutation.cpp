#include "cosetlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cosetlab {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size(), false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
      throw std::invalid_argument("Permutation: word is not a bijection of 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::reversed() const {
  std::vector<int> w(word_.rbegin(), word_.rend());
  return Permutation(std::move(w));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Permutation composition: size mismatch");
  std::vector<int> w(a.size());
  for (int i = 1; i <= a.size(); ++i) w[i - 1] = a(b(i));
  return Permutation(std::move(w));
}

namespace {

long long merge_count(std::vector<int>& v, std::vector<int>& tmp, int lo, int hi) {
  if (hi - lo < 2) return 0;
  const int mid = lo + (hi - lo) / 2;
  long long c = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
  int i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[i] <= v[j]) {
      tmp[k++] = v[i++];
    } else {
      c += mid - i;
      tmp[k++] = v[j++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
  return c;
}

}  // namespace

long long Permutation::inversions() const {
  std::vector<int> v = word_, tmp(word_.size());
  return merge_count(v, tmp, 0, static_cast<int>(v.size()));
}

long long Permutation::inversions_quadratic() const {
  long long c = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j]) ++c;
  return c;
}

std::vector<int> Permutation::descent_set() const {
  std::vector<int> s;
  for (int i = 1; i < size(); ++i)
    if (word_[i] < word_[i - 1]) s.push_back(i);
  return s;
}

int Permutation::descent_count() const {
  return static_cast<int>(descent_set().size());
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(word_.size(), false);
  std::vector<long long> lens;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = word_[j] - 1) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

int Permutation::cycle_count() const { return cycle_type().num_parts(); }

std::string Permutation::to_string() const {
  std::ostringstream os;
  if (size() <= 9) {
    for (int v : word_) os << v;
  } else {
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << word_[i];
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& s) {
  std::vector<int> w;
  if (s.find(',') != std::string::npos || s.find(' ') != std::string::npos) {
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, s.find(',') != std::string::npos ? ',' : ' '))
      if (!tok.empty()) w.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("Permutation::parse: bad character");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          const EnumLimits& limits) {
  if (n > limits.max_permutation_n)
    throw std::length_error(
        "for_each_permutation: n exceeds the exhaustive cap; use the Monte Carlo "
        "samplers instead");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace cosetlab
