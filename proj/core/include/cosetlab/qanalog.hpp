#pragma once

#include <vector>

#include "cosetlab/numbers.hpp"

namespace cosetlab {

// [m]_q = 1 + q + ... + q^{m-1};  [0]_q = 0.
BigInt q_int(int m, int q);

// [n]_q! = prod_{i=1}^{n-1} (1 + q + ... + q^i);  [0]! = [1]! = 1.
BigInt q_factorial(int n, int q);

// [n]!/([d_1]! ... [d_k]!) for a composition d of n. Exact integer.
BigInt q_multinomial(int n, const std::vector<int>& d, int q);

// Coefficients of prod_{i=1}^{n-1} (1 + x + ... + x^i): the Mahonian
// inversion-number generating polynomial, degree n(n-1)/2.
std::vector<BigInt> mahonian_coefficients(int n);

}  // namespace cosetlab
