#pragma once

#include <span>
#include <string>

#include "lexicov/frequency.h"

/// Data-parallel counting kernels. The serial versions are the reference the
/// OpenMP versions are tested against.
namespace lexicov::kernels {

WordCounts count_serial(std::span<const std::string> words);

/// Splits `words` into contiguous shards, counts each on its own thread and
/// merges the partial maps. Equal to count_serial for any `jobs`.
WordCounts count_parallel(std::span<const std::string> words, int jobs);

/// dst += src, per word.
void merge_into(WordCounts& dst, const WordCounts& src);

/// Sums a set of partial maps. Pairwise tree reduction across threads.
WordCounts merge_all(std::span<WordCounts> parts, int jobs);

/// Number of threads to use when the caller passes jobs <= 0.
int default_jobs();

}  // namespace lexicov::kernels
