#include <omp.h>

#include <algorithm>
#include <vector>

#include "lexicov/kernels.h"

namespace lexicov::kernels {

int default_jobs() { return std::max(1, omp_get_max_threads()); }

WordCounts count_parallel(std::span<const std::string> words, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  const std::size_t n = words.size();
  const std::size_t shards = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(n, 1));
  if (shards <= 1) return count_serial(words);

  std::vector<WordCounts> partial(shards);
#pragma omp parallel for num_threads(jobs) schedule(static)
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t begin = n * s / shards;
    const std::size_t end = n * (s + 1) / shards;
    partial[s] = count_serial(words.subspan(begin, end - begin));
  }
  return merge_all(partial, jobs);
}

WordCounts merge_all(std::span<WordCounts> parts, int jobs) {
  if (parts.empty()) return {};
  if (jobs <= 0) jobs = default_jobs();
  // Pairwise rounds: parts[i] += parts[i + stride].
  for (std::size_t stride = 1; stride < parts.size(); stride *= 2) {
    const std::size_t pairs = (parts.size() + 2 * stride - 1) / (2 * stride);
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
    for (std::size_t k = 0; k < pairs; ++k) {
      const std::size_t i = k * 2 * stride;
      if (i + stride < parts.size()) {
        merge_into(parts[i], parts[i + stride]);
        WordCounts().swap(parts[i + stride]);
      }
    }
  }
  return std::move(parts[0]);
}

}  // namespace lexicov::kernels
