#include "tlcat/linalg.hpp"

namespace tlcat {

std::vector<int> partition_from_nullities(const std::vector<int>& nullities) {
  std::vector<int> at_least;  // at_least[j-1] = number of blocks of size >= j
  for (std::size_t j = 1; j < nullities.size(); ++j) at_least.push_back(nullities[j] - nullities[j - 1]);
  std::vector<int> blocks;
  for (std::size_t j = at_least.size(); j >= 1; --j) {
    const int exact = at_least[j - 1] - (j < at_least.size() ? at_least[j] : 0);
    for (int c = 0; c < exact; ++c) blocks.push_back(int(j));
  }
  return blocks;
}

}  // namespace tlcat
