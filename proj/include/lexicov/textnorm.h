#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lexicov/config.h"

namespace lexicov {

struct RawText {
  std::string content;
  std::string source_id;
};

bool is_valid_utf8(std::string_view bytes);

/// Validates UTF-8 (Error kInvalidUtf8 otherwise) and drops a leading BOM.
RawText make_text(std::string content, std::string source_id);
RawText load_text(const std::filesystem::path& path);

struct Token {
  std::string surface;
  /// Lowercase alphabetic form; empty optional when the token was filtered.
  std::optional<std::string> normalized;
  std::size_t position = 0;
  bool sentence_initial = false;

  /// First code point is an uppercase Latin letter.
  bool capitalized() const;
};

/// Splits on whitespace and punctuation. Hyphens and apostrophes stay inside
/// a token when they sit between word characters, so "state-of-the-art" and
/// "don't" come out whole and can be filtered as units. A token is
/// sentence-initial at document start, after '.', '!' or '?' (optionally
/// followed by closing quotes or brackets) plus whitespace, and after a blank
/// line.
std::vector<Token> tokenize(std::string_view text);
inline std::vector<Token> tokenize(const RawText& text) { return tokenize(text.content); }

/// Lowercased surface if it consists only of letters (a-z, A-Z and
/// config.extra_letters in either case), otherwise nullopt.
std::optional<std::string> normalize_word(std::string_view surface, const PipelineConfig& config);

/// Sets token.normalized via normalize_word. Compounds are always ABSENT
/// here; splitting under config.split_hyphens happens in clean_tokens.
Token clean_token(Token token, const PipelineConfig& config);

/// Cleans a token stream and drops filtered tokens. With split_hyphens set,
/// hyphenated compounds contribute each valid part as its own token.
/// Positions are renumbered 0..n-1 on the output.
std::vector<Token> clean_tokens(std::vector<Token> tokens, const PipelineConfig& config);

class StopwordSet {
 public:
  StopwordSet() = default;
  /// Throws Error(kInvalidArgument) if any word is not normalized.
  StopwordSet(std::unordered_set<std::string> words, std::string version);

  /// One word per line, '#' comments and blank lines ignored. A
  /// "# version: X" comment sets the version; otherwise the file name is used.
  static StopwordSet parse(std::string_view content, std::string fallback_version);
  static StopwordSet load(const std::filesystem::path& path);

  bool contains(const std::string& word) const { return words_.contains(word); }
  const std::unordered_set<std::string>& words() const noexcept { return words_; }
  const std::string& version() const noexcept { return version_; }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
  std::string version_;
};

std::vector<std::string> remove_stopwords(std::span<const std::string> words,
                                          const StopwordSet& stops);

}  // namespace lexicov
