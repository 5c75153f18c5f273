#include "cosetlab/group_oracle.hpp"

namespace cosetlab {

SmallGroup<Permutation> symmetric_group(int n, const EnumLimits& limits) {
  std::vector<Permutation> elements;
  for_each_permutation(n, [&](const Permutation& p) { elements.push_back(p); },
                       limits);
  return SmallGroup<Permutation>(std::move(elements), Permutation::identity(n),
                                 limits);
}

std::vector<Permutation> parabolic_subgroup(const std::vector<long long>& blocks) {
  long long total = 0;
  for (long long part : blocks) {
    if (part < 1) throw std::invalid_argument("parabolic_subgroup: positive blocks");
    total += part;
  }
  const int n = static_cast<int>(total);
  std::vector<Permutation> out{Permutation::identity(n)};
  int offset = 0;
  for (long long part : blocks) {
    // Extend each element so far by every rearrangement of this block.
    std::vector<int> block(static_cast<std::size_t>(part));
    std::vector<Permutation> extended;
    for (int i = 0; i < part; ++i) block[static_cast<std::size_t>(i)] = offset + i + 1;
    std::sort(block.begin(), block.end());
    do {
      for (const Permutation& base : out) {
        std::vector<int> word = base.word();
        for (int i = 0; i < part; ++i)
          word[static_cast<std::size_t>(offset + i)] = block[static_cast<std::size_t>(i)];
        extended.emplace_back(std::move(word));
      }
    } while (std::next_permutation(block.begin(), block.end()));
    out = std::move(extended);
    offset += static_cast<int>(part);
  }
  return out;
}

}  // namespace cosetlab
