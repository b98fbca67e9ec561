#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexicov/config.h"
#include "lexicov/frequency.h"
#include "lexicov/lemma.h"
#include "lexicov/wordlist.h"

namespace lexicov {

/// One unigram row: token TAB year TAB match_count TAB volume_count.
struct NgramRecord {
  std::string token;
  int year = 0;
  std::uint64_t match_count = 0;
  std::uint64_t volume_count = 0;

  friend bool operator==(const NgramRecord&, const NgramRecord&) = default;
};

inline constexpr int kMinSaneYear = 1000;
inline constexpr int kMaxSaneYear = 2100;

/// Throws Error(kMalformedRow) on a wrong field count, non-integer fields or
/// a year outside [kMinSaneYear, kMaxSaneYear]. A trailing '\r' is ignored.
NgramRecord parse_ngram_row(std::string_view line);
/// Non-throwing variant for the ingestion loop.
std::optional<NgramRecord> try_parse_ngram_row(std::string_view line);

/// Strips a Google POS suffix ("dog_NOUN" -> "dog"). Returns nullopt for
/// tokens that are only a tag ("_NOUN_", "_START_").
std::optional<std::string_view> strip_pos_tag(std::string_view token);

/// Per-line accounting. lines_read always equals lines_malformed +
/// records_year_filtered + tokens_cleaned_away + lines_contributing.
struct IngestStats {
  std::uint64_t lines_read = 0;
  std::uint64_t lines_malformed = 0;
  std::uint64_t records_year_filtered = 0;
  std::uint64_t tokens_cleaned_away = 0;
  std::uint64_t lines_contributing = 0;
  std::uint64_t distinct_words_out = 0;
  std::uint64_t words_below_min_count = 0;
  std::uint64_t bytes_processed = 0;

  IngestStats& operator+=(const IngestStats& o);
  bool consistent() const {
    return lines_read == lines_malformed + records_year_filtered + tokens_cleaned_away + lines_contributing;
  }
  friend bool operator==(const IngestStats&, const IngestStats&) = default;
};

struct IngestOptions {
  int min_year = 1800;
  /// Words whose aggregated count is below this are dropped (0 = no floor).
  std::uint64_t min_count = 0;
  /// Normalization settings (extra letters etc.) used to clean tokens.
  PipelineConfig config;
  int jobs = 1;
  /// Plain-text shards are split into byte ranges of at most this size, and
  /// into at least `jobs` ranges.
  std::uint64_t chunk_bytes = 64ull << 20;
};

struct ShardStats {
  std::string shard;
  IngestStats stats;
};

struct IngestResult {
  WordCounts counts;
  IngestStats stats;
  std::vector<ShardStats> shards;

  /// Throws Error(kEmptyInput) when no word survived.
  FrequencyTable table() const;
};

/// Record-level aggregation: year filter, POS strip, clean, sum match_count.
IngestResult aggregate(std::span<const NgramRecord> rows, const IngestOptions& options);

/// Serial reference over a stream of TSV lines.
IngestResult aggregate_stream(std::istream& in, const IngestOptions& options);

/// Parallel aggregation over shard files (plain or gzip, detected by magic
/// bytes). Memory is bounded by the distinct surviving words per worker, not
/// by the number of rows. Throws Error(kIo) naming the failing shard.
IngestResult aggregate_files(std::span<const std::filesystem::path> inputs,
                             const IngestOptions& options);

/// Directories expand to their regular files in name order.
std::vector<std::filesystem::path> expand_inputs(std::span<const std::filesystem::path> inputs);

bool is_gzip_file(const std::filesystem::path& path);

/// Sums the counts of every surface form into its lemma. Total is unchanged.
FrequencyTable lemma_merge(const FrequencyTable& table, const LemmaDictionary& dict);

/// Lemma-merges (when config.lemmatize), ranks and selects the top
/// config.max_size headwords, or the config.threshold cutoff when no size is
/// set.
WordList build_gsl(const FrequencyTable& table, const PipelineConfig& config,
                   const LemmaDictionary& dict);

}  // namespace lexicov
