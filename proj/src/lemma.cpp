#include "lexicov/lemma.h"

#include <algorithm>
#include <unordered_set>

#include "lexicov/error.h"
#include "lexicov/io.h"

namespace lexicov {

namespace {

bool is_ascii_alpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// One rewrite step, or nullopt when no rule applies.
std::optional<std::string> apply_rule(const std::string& w, const LemmaDictionary& dict) {
  auto ends = [&](std::string_view s) { return w.size() > s.size() && w.ends_with(s); };
  auto known = [&](const std::string& s) { return dict.lookup(s) != nullptr; };
  auto ok = [](const std::string& s) { return s.size() >= 3; };

  for (Rule r : {Rule{"ies", "y"}, Rule{"ied", "y"}}) {
    if (ends(r.suffix)) {
      std::string cand = w.substr(0, w.size() - r.suffix.size()) + std::string(r.replacement);
      if (ok(cand)) return cand;
    }
  }

  auto verb_stem = [&](std::size_t cut) -> std::optional<std::string> {
    std::string base = w.substr(0, w.size() - cut);
    if (base.empty()) return std::nullopt;
    std::optional<std::string> undoubled;
    if (base.size() >= 2 && base.back() == base[base.size() - 2] && !is_vowel(base.back()))
      undoubled = base.substr(0, base.size() - 1);
    std::string with_e = base + "e";
    if (undoubled && ok(*undoubled) && known(*undoubled)) return undoubled;
    if (ok(with_e) && known(with_e)) return with_e;
    if (ok(base) && known(base)) return base;
    char last = base.back();
    if (undoubled && ok(*undoubled) && last != 'l' && last != 's' && last != 'z') return undoubled;
    if (ok(base)) return base;
    return std::nullopt;
  };

  if (ends("ing")) {
    if (auto s = verb_stem(3)) return s;
  }
  if (ends("es")) {
    std::string base = w.substr(0, w.size() - 2);
    if ((base.ends_with("s") || base.ends_with("x") || base.ends_with("z") ||
         base.ends_with("ch") || base.ends_with("sh")) && ok(base))
      return base;
  }
  if (ends("ed")) {
    if (auto s = verb_stem(2)) return s;
  }
  if (ends("s") && !w.ends_with("ss") && !w.ends_with("us") && !w.ends_with("is")) {
    std::string base = w.substr(0, w.size() - 1);
    if (ok(base)) return base;
  }
  return std::nullopt;
}

}  // namespace

LemmaDictionary::LemmaDictionary(std::unordered_map<std::string, std::string> entries,
                                 std::string version)
    : version_(std::move(version)) {
  // Collapse chains; on a cycle the lexicographically smallest member wins.
  auto resolve = [&](const std::string& start) {
    std::vector<std::string> path;
    std::unordered_set<std::string> seen;
    std::string w = start;
    while (true) {
      auto it = entries.find(w);
      if (it == entries.end() || it->second == w) return w;
      if (!seen.insert(w).second) {
        auto cycle_begin = std::find(path.begin(), path.end(), w);
        return *std::min_element(cycle_begin, path.end());
      }
      path.push_back(w);
      w = it->second;
    }
  };

  entries_.reserve(entries.size() * 2);
  for (const auto& [surface, lemma] : entries) entries_[surface] = resolve(surface);
  std::vector<std::string> lemmas;
  lemmas.reserve(entries_.size());
  for (const auto& [surface, lemma] : entries_) lemmas.push_back(lemma);
  for (auto& l : lemmas) entries_[l] = l;
}

LemmaDictionary LemmaDictionary::parse(std::string_view content, std::string fallback_version) {
  std::unordered_map<std::string, std::string> entries;
  std::string version = std::move(fallback_version);
  std::size_t pos = 0, line_no = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kTag = "version:";
      if (auto at = line.find(kTag); at != std::string_view::npos) {
        std::string_view v = line.substr(at + kTag.size());
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        if (!v.empty()) version = std::string(v);
      }
      continue;
    }
    auto tab = line.find('\t');
    std::string surface = lower_ascii(line.substr(0, tab));
    std::string lemma = tab == std::string_view::npos ? std::string() : lower_ascii(line.substr(tab + 1));
    if (!is_ascii_alpha(surface) || !is_ascii_alpha(lemma))
      throw Error(ErrorCode::kInvalidArgument,
                  "lemma dictionary line " + std::to_string(line_no) + " is not 'surface<TAB>lemma'");
    entries.try_emplace(std::move(surface), std::move(lemma));
  }
  return LemmaDictionary(std::move(entries), std::move(version));
}

LemmaDictionary LemmaDictionary::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.filename().string());
}

const std::string* LemmaDictionary::lookup(const std::string& surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string lemmatize(std::string_view word, const LemmaDictionary& dict) {
  std::string w(word);
  while (true) {
    if (const std::string* hit = dict.lookup(w)) return *hit;
    auto next = apply_rule(w, dict);
    if (!next) return w;
    w = std::move(*next);
  }
}

ProperNounVerdicts detect_proper_nouns(std::span<const Token> tokens, double threshold,
                                       std::size_t min_count) {
  ProperNounVerdicts verdicts;
  for (const Token& t : tokens) {
    if (!t.normalized) continue;
    auto& v = verdicts[*t.normalized];
    ++v.occurrences;
    if (t.capitalized() && !t.sentence_initial) ++v.capitalized_mid_sentence;
  }
  for (auto& [word, v] : verdicts) {
    v.word = word;
    v.evidence = static_cast<double>(v.capitalized_mid_sentence) / static_cast<double>(v.occurrences);
    v.is_proper = word != "i" && v.occurrences >= min_count && v.evidence >= threshold;
  }
  return verdicts;
}

std::vector<Headword> apply_proper_noun_policy(std::span<const std::string> words,
                                               const ProperNounVerdicts& verdicts,
                                               const PipelineConfig& config,
                                               const LemmaDictionary& dict) {
  const bool lemmatize_now = config.lemmatize && config.lemma_order == LemmaOrder::kBeforeCount;
  std::unordered_map<std::string, std::string> cache;
  std::vector<Headword> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    auto it = verdicts.find(w);
    if (it != verdicts.end() && it->second.is_proper) {
      if (config.keep_proper_nouns) out.push_back({w, true});
      continue;
    }
    if (!lemmatize_now) {
      out.push_back({w, false});
      continue;
    }
    auto [slot, inserted] = cache.try_emplace(w);
    if (inserted) slot->second = lemmatize(w, dict);
    out.push_back({slot->second, false});
  }
  return out;
}

}  // namespace lexicov
