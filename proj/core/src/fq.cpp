#include "cosetlab/fq.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cosetlab {

namespace {

// Irreducible moduli over F_p for the prime powers q = p^k <= 64,
// coefficients c_0..c_k ascending.
const std::map<int, std::vector<int>> kModuli = {
    {4, {1, 1, 1}},           // x^2 + x + 1 over F_2
    {8, {1, 1, 0, 1}},        // x^3 + x + 1
    {9, {1, 0, 1}},           // x^2 + 1 over F_3
    {16, {1, 1, 0, 0, 1}},    // x^4 + x + 1
    {25, {3, 0, 1}},          // x^2 + 3 over F_5
    {27, {1, 2, 0, 1}},       // x^3 + 2x + 1 over F_3
    {32, {1, 0, 1, 0, 0, 1}}, // x^5 + x^2 + 1
    {49, {1, 0, 1}},          // x^2 + 1 over F_7
    {64, {1, 1, 0, 0, 0, 0, 1}},  // x^6 + x + 1
};

std::vector<int> decode(int code, int p, int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int encode(const std::vector<int>& c, int p, int k) {
  int code = 0;
  for (int i = k - 1; i >= 0; --i) code = code * p + (i < (int)c.size() ? c[i] : 0);
  return code;
}

// (a * b) mod modulus over F_p
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& modulus, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const int k = static_cast<int>(modulus.size()) - 1;  // degree
  for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    // subtract c * x^{d-k} * modulus (modulus is monic)
    for (int i = 0; i <= k; ++i) {
      int& t = prod[d - k + i];
      t = ((t - c * modulus[i]) % p + p * p) % p;
    }
  }
  prod.resize(k);
  return prod;
}

}  // namespace

bool is_prime_power(int q, int* p_out, int* k_out) {
  if (q < 2) return false;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) p = q;  // q prime
  int k = 0, m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

FqField::FqField(int q) : q_(q) {
  if (!is_prime_power(q, &p_, &k_))
    throw std::domain_error("FqField: q must be a prime power");
  if (q > 64) throw std::domain_error("FqField: q <= 64 supported");
  if (k_ > 1) {
    auto it = kModuli.find(q);
    if (it == kModuli.end()) throw std::logic_error("FqField: missing modulus");
    modulus_ = it->second;
  } else {
    modulus_ = {0, 1};  // x, by convention; unused for prime fields
  }
  build_tables();
  verify_axioms();
}

void FqField::build_tables() {
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    const auto pa = decode(a, p_, k_);
    for (int b = 0; b < q_; ++b) {
      const auto pb = decode(b, p_, k_);
      std::vector<int> sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
      add_[idx(a, b)] = static_cast<std::uint8_t>(encode(sum, p_, k_));
      mul_[idx(a, b)] =
          static_cast<std::uint8_t>(encode(polymulmod(pa, pb, modulus_, p_), p_, k_));
    }
    std::vector<int> na(k_);
    for (int i = 0; i < k_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(encode(na, p_, k_));
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[idx(a, b)] == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

int FqField::inv(int a) const {
  if (a == 0) throw std::domain_error("FqField::inv: zero has no inverse");
  return inv_[a];
}

void FqField::verify_axioms() const {
  auto fail = [](const char* what) { throw std::logic_error(what); };
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a) fail("field: additive identity");
    if (mul(a, 1) != a) fail("field: multiplicative identity");
    if (add(a, neg(a)) != 0) fail("field: additive inverse");
    if (a != 0 && mul(a, inv_[a]) != 1) fail("field: multiplicative inverse");
  }
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a)) fail("field: + commutativity");
      if (mul(a, b) != mul(b, a)) fail("field: * commutativity");
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("field: + associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("field: * associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("field: distributivity");
      }
    }
}

std::shared_ptr<const FqField> FqField::make(int q) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FqField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<const FqField>(new FqField(q));
  cache.emplace(q, f);
  return f;
}

}  // namespace cosetlab
