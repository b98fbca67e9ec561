#include "lexicov/frequency.h"

#include <algorithm>

#include "lexicov/error.h"
#include "lexicov/kernels.h"

namespace lexicov {

FrequencyTable::FrequencyTable(WordCounts counts, Provenance provenance)
    : counts_(std::move(counts)), provenance_(std::move(provenance)) {
  if (counts_.empty()) throw Error(ErrorCode::kEmptyInput, "no tokens to count");
  for (const auto& [word, n] : counts_) {
    if (n == 0) throw Error(ErrorCode::kInvalidArgument, "zero count for '" + word + "'");
    total_ += n;
  }
}

std::uint64_t FrequencyTable::count(const std::string& word) const {
  auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

FrequencyTable count_frequencies(std::span<const std::string> headwords, Provenance provenance,
                                 int jobs) {
  if (headwords.empty()) throw Error(ErrorCode::kEmptyInput, "no tokens to count");
  WordCounts counts =
      jobs == 1 ? kernels::count_serial(headwords) : kernels::count_parallel(headwords, jobs);
  return FrequencyTable(std::move(counts), std::move(provenance));
}

Fraction coverage_of(const std::string& word, const FrequencyTable& table) {
  return Fraction(table.count(word), table.total());
}

RankedList rank(const FrequencyTable& table) {
  std::vector<std::pair<const std::string*, std::uint64_t>> order;
  order.reserve(table.size());
  for (const auto& [word, n] : table.counts()) order.emplace_back(&word, n);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return *a.first < *b.first;
  });

  RankedList out;
  out.total = table.total();
  out.entries.reserve(order.size());
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    running += order[i].second;
    out.entries.push_back(RankedEntry{i + 1, *order[i].first, order[i].second,
                                      Fraction(order[i].second, table.total()),
                                      Fraction(running, table.total())});
  }
  return out;
}

CutoffResult cutoff(const RankedList& ranked, Fraction threshold) {
  if (ranked.empty()) throw Error(ErrorCode::kInvalidArgument, "cutoff on an empty ranked list");
  if (threshold.num() == 0 || threshold > Fraction(1, 1))
    throw Error(ErrorCode::kInvalidArgument, "threshold must be in (0, 1]");
  // cum_coverage is non-decreasing, so the first crossing is a lower bound.
  auto it = std::partition_point(ranked.entries.begin(), ranked.entries.end(),
                                 [&](const RankedEntry& e) { return e.cum_coverage < threshold; });
  return CutoffResult{it->rank, it->cum_coverage, threshold};
}

}  // namespace lexicov
