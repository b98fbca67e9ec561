#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexicov/config.h"
#include "lexicov/textnorm.h"

namespace lexicov {

/// POS-free surface -> lemma map. Construction collapses chains (a->b->c
/// becomes a->c, b->c) and adds an identity entry for every lemma, so every
/// value is a fixpoint of the map.
class LemmaDictionary {
 public:
  LemmaDictionary() = default;
  LemmaDictionary(std::unordered_map<std::string, std::string> entries, std::string version);

  /// TSV "surface<TAB>lemma", '#' comments ignored, "# version: X" sets the
  /// version. Keys and values are ASCII-lowercased; pairs that are not
  /// alphabetic are rejected with Error(kInvalidArgument) naming the line.
  static LemmaDictionary parse(std::string_view content, std::string fallback_version);
  static LemmaDictionary load(const std::filesystem::path& path);

  const std::string* lookup(const std::string& surface) const;
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::string& version() const noexcept { return version_; }
  const std::unordered_map<std::string, std::string>& entries() const noexcept { return entries_; }

 private:
  std::unordered_map<std::string, std::string> entries_;
  std::string version_;
};

/// Dictionary lookup, else the first applicable suffix rule (longest suffix
/// first: -ies/-ied -> -y, -ing, -es after s/x/z/ch/sh, -ed, -s), repeated
/// until the word no longer changes. A rule applies only if the result has
/// at least three letters. For -ing/-ed the undoubled stem ("running" ->
/// "run") and the stem plus 'e' ("whaling" -> "whale") are preferred when
/// the dictionary knows them. -s is not stripped from words ending in ss,
/// us or is. The result is always a fixpoint of lemmatize.
std::string lemmatize(std::string_view word, const LemmaDictionary& dict);

struct ProperNounVerdict {
  std::string word;
  bool is_proper = false;
  /// capitalized_mid_sentence / occurrences
  double evidence = 0.0;
  std::size_t occurrences = 0;
  std::size_t capitalized_mid_sentence = 0;
};

using ProperNounVerdicts = std::unordered_map<std::string, ProperNounVerdict>;

/// Capitalization statistics per normalized word. A word is proper when it
/// occurs at least `min_count` times and evidence >= threshold. The pronoun
/// "i" is never proper. Tokens without a normalized form are ignored.
ProperNounVerdicts detect_proper_nouns(std::span<const Token> tokens, double threshold = 0.9,
                                       std::size_t min_count = 3);

struct Headword {
  std::string text;
  bool proper = false;

  friend bool operator==(const Headword&, const Headword&) = default;
};

/// Proper nouns are kept verbatim (and tagged) when config.keep_proper_nouns,
/// dropped otherwise. Other words are lemmatized when config.lemmatize is set
/// and the lemma order is kBeforeCount; with kAfterCutoff they pass through
/// unchanged and the caller lemmatizes after the cutoff.
std::vector<Headword> apply_proper_noun_policy(std::span<const std::string> words,
                                               const ProperNounVerdicts& verdicts,
                                               const PipelineConfig& config,
                                               const LemmaDictionary& dict);

}  // namespace lexicov
