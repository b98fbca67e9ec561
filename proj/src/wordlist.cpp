#include "lexicov/wordlist.h"

#include <algorithm>

#include "lexicov/error.h"
#include "lexicov/io.h"

namespace lexicov {

namespace {

constexpr std::string_view kHeaderLine = "# lexicov wordlist";

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

void check_provenance_field(std::string_view key, std::string_view value) {
  if (key.empty() || key == "kind" || key.find_first_of("=\n\r") != std::string_view::npos ||
      value.find_first_of("\n\r") != std::string_view::npos || key != trim(key) ||
      value != trim(value))
    throw Error(ErrorCode::kInvalidArgument, "invalid provenance entry '" + std::string(key) + "'");
}

}  // namespace

std::string_view to_string(ListKind kind) {
  switch (kind) {
    case ListKind::kSwl: return "SWL";
    case ListKind::kGsl: return "GSL";
    case ListKind::kReference: return "REFERENCE";
  }
  return "REFERENCE";
}

ListKind parse_list_kind(std::string_view text) {
  if (text == "SWL") return ListKind::kSwl;
  if (text == "GSL") return ListKind::kGsl;
  if (text == "REFERENCE") return ListKind::kReference;
  throw Error(ErrorCode::kInvalidArgument, "unknown list kind '" + std::string(text) + "'");
}

std::optional<std::string> provenance_value(const Provenance& p, std::string_view key) {
  for (const auto& [k, v] : p)
    if (k == key) return v;
  return std::nullopt;
}

void set_provenance(Provenance& p, std::string key, std::string value) {
  check_provenance_field(key, value);
  for (auto& [k, v] : p) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  p.emplace_back(std::move(key), std::move(value));
}

bool is_normalized_word(std::string_view word) {
  if (word.empty()) return false;
  return std::all_of(word.begin(), word.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return c >= 0x80 || (c >= 'a' && c <= 'z');
  });
}

WordList::WordList(ListKind kind, std::vector<std::string> headwords, Provenance provenance)
    : kind_(kind), headwords_(std::move(headwords)) {
  index_.reserve(headwords_.size());
  for (const auto& w : headwords_) {
    if (!is_normalized_word(w))
      throw Error(ErrorCode::kInvalidArgument, "headword is not normalized: '" + w + "'");
    if (!index_.insert(w).second)
      throw Error(ErrorCode::kInvalidArgument, "duplicate headword '" + w + "'");
  }
  for (auto& [k, v] : provenance) lexicov::set_provenance(provenance_, std::move(k), std::move(v));
}

void WordList::set_provenance(std::string key, std::string value) {
  lexicov::set_provenance(provenance_, std::move(key), std::move(value));
}

WordList exclude_known(const WordList& list, const WordList& known) {
  std::vector<std::string> kept;
  kept.reserve(list.size());
  for (const auto& w : list.headwords())
    if (!known.contains(w)) kept.push_back(w);
  std::size_t removed = list.size() - kept.size();
  WordList out(list.kind(), std::move(kept), list.provenance());
  if (!known.empty() || out.provenance_value("excluded_known")) {
    std::size_t previous = 0;
    if (auto p = out.provenance_value("excluded_known")) previous = std::stoull(*p);
    out.set_provenance("excluded_known", std::to_string(previous + removed));
  }
  return out;
}

WordList parse_wordlist(std::string_view content, ListKind default_kind) {
  ListKind kind = default_kind;
  Provenance provenance;
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  std::size_t skipped = 0, duplicates = 0;
  bool in_header = true;

  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line = content.substr(pos, nl == std::string_view::npos ? content.npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;

    std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      if (!in_header) continue;
      std::string_view body = trim(t.substr(1));
      auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      std::string key(trim(body.substr(0, eq)));
      std::string value(trim(body.substr(eq + 1)));
      if (key == "kind") {
        kind = parse_list_kind(value);
      } else if (!key.empty()) {
        set_provenance(provenance, std::move(key), std::move(value));
      }
      continue;
    }
    in_header = false;
    std::string w(t);
    std::transform(w.begin(), w.end(), w.begin(), [](char c) {
      return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    });
    if (!is_normalized_word(w)) {
      ++skipped;
      continue;
    }
    if (!seen.insert(w).second) {
      ++duplicates;
      continue;
    }
    words.push_back(std::move(w));
  }
  if (skipped) set_provenance(provenance, "skipped_entries", std::to_string(skipped));
  if (duplicates) set_provenance(provenance, "duplicates_dropped", std::to_string(duplicates));
  return WordList(kind, std::move(words), std::move(provenance));
}

std::string format_wordlist(const WordList& list) {
  std::string out;
  out += kHeaderLine;
  out += '\n';
  out += "# kind=";
  out += to_string(list.kind());
  out += '\n';
  for (const auto& [k, v] : list.provenance()) {
    out += "# " + k + "=" + v + "\n";
  }
  for (const auto& w : list.headwords()) {
    out += w;
    out += '\n';
  }
  return out;
}

WordList read_wordlist(const std::filesystem::path& path, ListKind default_kind) {
  return parse_wordlist(read_file(path), default_kind);
}

void write_wordlist(const std::filesystem::path& path, const WordList& list) {
  write_file_atomic(path, format_wordlist(list));
}

}  // namespace lexicov
