#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cosetlab {

// One acceptance criterion outcome. `details` is a short human-readable
// account of the quantities actually measured.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
};

inline constexpr int kNumCriteria = 17;

// Run one of the 17 acceptance criteria (1-based). Randomized criteria
// derive their streams from `seed` deterministically.
CriterionResult run_criterion(int id, std::uint64_t seed);

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed);

// Named reproduction recipes exposed by the CLI; each maps onto one
// acceptance criterion.
std::vector<std::string> recipe_names();
CriterionResult run_recipe(const std::string& name, std::uint64_t seed);

// The bundled 4x4 hair/eye classification counts (row-major), n = 592.
const std::vector<std::vector<long long>>& table1_counts();

}  // namespace cosetlab
