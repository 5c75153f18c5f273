#pragma once

#include <cstdint>
#include <random>

#include "cosetlab/numbers.hpp"

namespace cosetlab {

// All samplers take a caller-supplied stream. Concurrent sampling uses one
// independently seeded Rng per worker.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_u64_below(Rng& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

// Uniform BigInt in [0, bound) by masked rejection on the top limb.
inline BigInt uniform_bigint_below(Rng& rng, const BigInt& bound) {
  if (bound <= 0) throw std::domain_error("uniform_bigint_below: bound <= 0");
  if (bound <= std::uint64_t(-1))
    return BigInt(uniform_u64_below(rng, bound.convert_to<std::uint64_t>()));
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << top_bits) - 1);
  for (;;) {
    BigInt v = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint64_t limb = rng();
      if (w + 1 == words) limb &= top_mask;
      v |= BigInt(limb) << (64 * w);
    }
    if (v < bound) return v;
  }
}

// Uniform rational in [0, 1) with 64 bits of resolution. Exact comparisons
// against rational CDFs stay exact.
inline Rational uniform_unit_rational(Rng& rng) {
  return Rational(BigInt(rng()), ipow(BigInt(2), 64));
}

}  // namespace cosetlab
