#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexicov/config.h"
#include "lexicov/frequency.h"
#include "lexicov/lemma.h"
#include "lexicov/textnorm.h"
#include "lexicov/wordlist.h"

namespace lexicov {

/// Immutable linguistic data shared by every pipeline stage.
struct Resources {
  LemmaDictionary lemmas;
  StopwordSet stopwords;

  static Resources load(const std::filesystem::path& lemma_dict,
                        const std::filesystem::path& stopwords);
};

/// $LEXICOV_DATA_DIR if set, else the directory configured at build time.
std::filesystem::path data_dir();
std::filesystem::path default_lemma_dict_path();
std::filesystem::path default_stopwords_path();
/// Loads the bundled resources from data_dir(). Throws Error(kIo).
Resources load_default_resources();

/// Settings that must agree between a list and a table for coverage to be
/// meaningful.
Provenance table_provenance(const PipelineConfig& config, const Resources& res);

/// tokenize -> clean -> stopwords -> proper-noun policy -> lemmatize
/// (when the lemma order is kBeforeCount). `lemmatize` overrides
/// config.lemmatize so callers can ask for the surface stream.
std::vector<Headword> prepare_headwords(const RawText& text, const PipelineConfig& config,
                                        const Resources& res, bool lemmatize);

/// The table a list is evaluated against: fully lemmatized when
/// config.lemmatize, whatever the lemma order. Throws Error(kEmptyInput).
FrequencyTable build_table(const RawText& text, const PipelineConfig& config,
                           const Resources& res, int jobs = 1);

struct SwlBuild {
  WordList list;
  CutoffResult cutoff;             // on the counting stream
  FrequencyTable table;            // evaluation table (see build_table)
  Fraction achieved;               // list_coverage(list, table)
  bool threshold_reached = true;
  std::size_t surface_vocabulary = 0;   // distinct words, no lemmatization
  std::size_t headword_vocabulary = 0;  // distinct headwords in `table`
};

/// Throws Error(kEmptyInput) when nothing survives normalization.
SwlBuild build_swl_detailed(const RawText& text, const PipelineConfig& config,
                            const Resources& res, int jobs = 1);
WordList build_swl(const RawText& text, const PipelineConfig& config, const Resources& res);

/// Sum of counts of listed headwords over N, exact. Throws
/// Error(kConfigMismatch) when list and table record different lemmatization
/// settings; lists without those keys (plain reference lists) are accepted.
Fraction list_coverage(const WordList& list, const FrequencyTable& table);

/// True when list_coverage would not raise kConfigMismatch.
bool compatible(const Provenance& list, const Provenance& table);

}  // namespace lexicov
