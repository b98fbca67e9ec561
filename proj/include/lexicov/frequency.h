#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexicov/fraction.h"
#include "lexicov/wordlist.h"

namespace lexicov {

using WordCounts = std::unordered_map<std::string, std::uint64_t>;

/// headword -> count with N = sum of counts. Every count is at least 1 and
/// the table is never empty.
class FrequencyTable {
 public:
  /// Throws Error(kEmptyInput) when `counts` is empty and
  /// Error(kInvalidArgument) when any count is zero.
  explicit FrequencyTable(WordCounts counts, Provenance provenance = {});

  std::uint64_t count(const std::string& word) const;
  std::uint64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return counts_.size(); }
  const WordCounts& counts() const noexcept { return counts_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  /// Compares counts only; provenance is metadata.
  friend bool operator==(const FrequencyTable& a, const FrequencyTable& b) {
    return a.total_ == b.total_ && a.counts_ == b.counts_;
  }

 private:
  WordCounts counts_;
  std::uint64_t total_ = 0;
  Provenance provenance_;
};

/// Throws Error(kEmptyInput) for an empty sequence. `jobs` > 1 shards the
/// counting across OpenMP threads; the result is identical either way.
FrequencyTable count_frequencies(std::span<const std::string> headwords, Provenance provenance = {},
                                 int jobs = 1);

/// count(word) / N, exact. Zero for absent words.
Fraction coverage_of(const std::string& word, const FrequencyTable& table);

struct RankedEntry {
  std::size_t rank = 0;  // 1-based
  std::string headword;
  std::uint64_t count = 0;
  Fraction coverage;
  Fraction cum_coverage;

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct RankedList {
  std::vector<RankedEntry> entries;
  std::uint64_t total = 0;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  const RankedEntry& operator[](std::size_t i) const { return entries[i]; }
};

/// Count descending, ties broken by byte-wise ascending headword.
RankedList rank(const FrequencyTable& table);

struct CutoffResult {
  std::size_t p = 0;
  Fraction achieved;
  Fraction threshold;
};

/// Smallest rank whose cumulative coverage reaches the threshold. Ties in
/// count at the boundary do not extend the list. Throws
/// Error(kInvalidArgument) for an empty list or a threshold outside (0, 1].
CutoffResult cutoff(const RankedList& ranked, Fraction threshold);

}  // namespace lexicov
