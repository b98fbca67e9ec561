#include "lexicov/kernels.h"

namespace lexicov::kernels {

WordCounts count_serial(std::span<const std::string> words) {
  WordCounts counts;
  for (const auto& w : words) ++counts[w];
  return counts;
}

void merge_into(WordCounts& dst, const WordCounts& src) {
  for (const auto& [word, n] : src) dst[word] += n;
}

}  // namespace lexicov::kernels
