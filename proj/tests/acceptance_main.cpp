// Acceptance gate: runs the 17 verification criteria and prints one
// pass/fail line per criterion. Usage: acceptance [--seed S] [id ...]
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cosetlab/recipes.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 12345;
  if (const char* env = std::getenv("COSETLAB_SEED")) seed = std::strtoull(env, nullptr, 10);
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      ids.push_back(std::atoi(arg.c_str()));
    }
  }
  if (ids.empty())
    for (int id = 1; id <= cosetlab::kNumCriteria; ++id) ids.push_back(id);

  std::cout << "seed: " << seed << "\n";
  int failures = 0;
  for (int id : ids) {
    const auto start = std::chrono::steady_clock::now();
    cosetlab::CriterionResult r;
    try {
      r = cosetlab::run_criterion(id, seed);
    } catch (const std::exception& e) {
      r = {id, "criterion-" + std::to_string(id), false,
           std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!r.pass) ++failures;
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " ("
              << r.name << "): " << r.details << " [" << secs << "s]\n";
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
