#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "lexicov/fraction.h"
#include "lexicov/wordlist.h"

namespace lexicov {

/// When lemmatization happens relative to counting. kAfterCutoff counts
/// surface words, applies the cutoff, then lemmatizes and de-duplicates the
/// surviving words.
enum class LemmaOrder { kBeforeCount, kAfterCutoff };

std::string_view to_string(LemmaOrder order);
LemmaOrder parse_lemma_order(std::string_view text);

struct PipelineConfig {
  Fraction threshold{95, 100};
  bool lemmatize = true;
  bool remove_stopwords = false;
  bool keep_proper_nouns = true;
  std::optional<std::size_t> max_size;
  LemmaOrder lemma_order = LemmaOrder::kBeforeCount;
  std::optional<WordList> exclude_list;

  // Token normalization.
  bool split_hyphens = false;
  /// Lowercase UTF-8 letters accepted in addition to a-z (e.g. "éèàç").
  std::string extra_letters;

  // Proper-noun heuristic.
  double proper_threshold = 0.9;
  std::size_t proper_min_count = 3;

  /// Throws Error(kInvalidArgument) naming the offending field.
  void validate() const;

  /// Every field as key=value, in a fixed order.
  Provenance snapshot() const;
};

}  // namespace lexicov
