#include "cosetlab/qanalog.hpp"

#include <stdexcept>

namespace cosetlab {

BigInt q_int(int m, int q) {
  if (m < 0) throw std::domain_error("q_int: m < 0");
  BigInt r = 0, p = 1;
  for (int i = 0; i < m; ++i) {
    r += p;
    p *= q;
  }
  return r;
}

BigInt q_factorial(int n, int q) {
  if (n < 0) throw std::domain_error("q_factorial: n < 0");
  if (q < 2) throw std::domain_error("q_factorial: q >= 2 required");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= q_int(i, q);
  return r;
}

BigInt q_multinomial(int n, const std::vector<int>& d, int q) {
  int sum = 0;
  for (int x : d) sum += x;
  if (sum != n) throw std::invalid_argument("q_multinomial: composition does not sum to n");
  Rational r(q_factorial(n, q));
  for (int x : d) r /= Rational(q_factorial(x, q));
  if (boost::multiprecision::denominator(r) != 1)
    throw std::logic_error("q_multinomial: non-integer result");
  return boost::multiprecision::numerator(r);
}

std::vector<BigInt> mahonian_coefficients(int n) {
  std::vector<BigInt> c{1};
  for (int i = 1; i < n; ++i) {
    // multiply by 1 + x + ... + x^i
    std::vector<BigInt> next(c.size() + i, 0);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (int b = 0; b <= i; ++b) next[a + b] += c[a];
    c = std::move(next);
  }
  return c;
}

}  // namespace cosetlab
