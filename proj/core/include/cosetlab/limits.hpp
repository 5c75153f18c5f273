#pragma once

#include <cstdint>

namespace cosetlab {

// Caps for exhaustive enumeration. These are configuration values, not
// hard-coded constants: every enumerating entry point takes one (defaulted)
// so callers can loosen or tighten them.
struct EnumLimits {
  int max_permutation_n = 10;          // n! sweeps
  std::uint64_t max_group_order = 1'000'000;  // explicit group element lists
  int max_inversion_poly_n = 200;      // inversion-distribution polynomial
  std::uint64_t max_table_count = 1'000'000;  // contingency-table enumeration
};

inline const EnumLimits kDefaultLimits{};

}  // namespace cosetlab
