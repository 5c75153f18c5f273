#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace cosetlab {

// F_q for prime powers q <= 64. Elements are integer codes 0..q-1; for
// q = p^k the code packs the polynomial coefficients as base-p digits,
// little-endian (code = c_0 + c_1 p + ... + c_{k-1} p^{k-1}).
//
// Arithmetic is table-driven; the tables are verified against the field
// axioms at construction.
class FqField {
 public:
  static std::shared_ptr<const FqField> make(int q);

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  // Modulus polynomial coefficients c_0..c_k (prime fields: x - 0, unused).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int zero() const { return 0; }
  int one() const { return 1; }

 private:
  explicit FqField(int q);
  void build_tables();
  void verify_axioms() const;
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  int q_, p_, k_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const FqField>;

bool is_prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);

}  // namespace cosetlab
