#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lexicov {

enum class ListKind { kSwl, kGsl, kReference };

std::string_view to_string(ListKind kind);
ListKind parse_list_kind(std::string_view text);

/// Ordered key=value pairs describing how an artifact was produced.
using Provenance = std::vector<std::pair<std::string, std::string>>;

std::optional<std::string> provenance_value(const Provenance& p, std::string_view key);
void set_provenance(Provenance& p, std::string key, std::string value);

/// An ordered set of normalized headwords. SWL/GSL lists are in rank order,
/// reference lists keep file order.
class WordList {
 public:
  WordList() = default;
  /// Throws Error(kInvalidArgument) on duplicate or non-normalized headwords.
  WordList(ListKind kind, std::vector<std::string> headwords, Provenance provenance = {});

  ListKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& headwords() const noexcept { return headwords_; }
  std::size_t size() const noexcept { return headwords_.size(); }
  bool empty() const noexcept { return headwords_.empty(); }
  bool contains(std::string_view word) const { return index_.contains(std::string(word)); }

  const Provenance& provenance() const noexcept { return provenance_; }
  std::optional<std::string> provenance_value(std::string_view key) const {
    return lexicov::provenance_value(provenance_, key);
  }
  void set_provenance(std::string key, std::string value);

  friend bool operator==(const WordList& a, const WordList& b) {
    return a.kind_ == b.kind_ && a.headwords_ == b.headwords_ && a.provenance_ == b.provenance_;
  }

 private:
  ListKind kind_ = ListKind::kReference;
  std::vector<std::string> headwords_;
  std::unordered_set<std::string> index_;
  Provenance provenance_;
};

/// True for a non-empty string with no ASCII uppercase, digits, whitespace,
/// punctuation or control bytes. Non-ASCII bytes are allowed so lists built
/// with extra letters remain valid.
bool is_normalized_word(std::string_view word);

/// Set difference `list \ known`, preserving the order of `list`.
WordList exclude_known(const WordList& list, const WordList& known);

/// Text format: optional leading '#' header block ("# key=value" lines are
/// provenance, other '#' lines are comments), then one headword per line.
/// Entries are trimmed and ASCII-lowercased; entries that are still not
/// normalized are skipped and duplicates keep their first position. Both
/// counts are recorded in provenance when non-zero.
WordList parse_wordlist(std::string_view content, ListKind default_kind = ListKind::kReference);
std::string format_wordlist(const WordList& list);

WordList read_wordlist(const std::filesystem::path& path,
                       ListKind default_kind = ListKind::kReference);
void write_wordlist(const std::filesystem::path& path, const WordList& list);

}  // namespace lexicov
