#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace cosetlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A probability held as an exact reduced rational. Construction enforces
// the [0, 1] range; everything downstream can rely on it.
class ExactProb {
 public:
  ExactProb() = default;
  explicit ExactProb(Rational v) : value_(std::move(v)) {
    if (value_ < 0 || value_ > 1)
      throw std::domain_error("ExactProb: value outside [0, 1]");
  }
  ExactProb(BigInt num, BigInt den)
      : ExactProb(Rational(std::move(num), std::move(den))) {}

  const Rational& value() const { return value_; }
  double to_double() const { return value_.convert_to<double>(); }

  friend bool operator==(const ExactProb& a, const ExactProb& b) = default;

 private:
  Rational value_ = 0;
};

inline BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

inline Rational rpow(const Rational& base, int exp) {
  if (exp < 0) return Rational(1) / rpow(base, -exp);
  Rational r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// Determinant of a small dense rational matrix by fraction-free-ish
// Gaussian elimination. Exact; used for the descent determinant formula.
Rational rational_det(std::vector<std::vector<Rational>> m);

}  // namespace cosetlab
