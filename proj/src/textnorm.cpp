#include "lexicov/textnorm.h"

#include <algorithm>

#include "lexicov/error.h"
#include "lexicov/io.h"

namespace lexicov {

namespace {

enum class CharClass { kSpace, kPunct, kJoiner, kWord };

struct Decoded {
  char32_t cp;
  std::size_t len;
};

// Lenient decoder: an invalid byte decodes as itself with length 1, which
// later makes its token fail normalization.
Decoded decode(std::string_view s, std::size_t i) {
  auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3 : (b0 >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || i + len > s.size()) return {0xFFFD, 1};
  char32_t cp = len == 2 ? (b0 & 0x1F) : len == 3 ? (b0 & 0x0F) : (b0 & 0x07);
  for (std::size_t k = 1; k < len; ++k) {
    auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_space(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200B;
  }
}

bool is_joiner(char32_t cp) {
  return cp == '-' || cp == '\'' || cp == 0x2019 || cp == 0x2010 || cp == 0x2011;
}

bool is_hyphen(char32_t cp) { return cp == '-' || cp == 0x2010 || cp == 0x2011; }

bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0x00A1: case 0x00A7: case 0x00AB: case 0x00B6: case 0x00B7:
    case 0x00BB: case 0x00BF: case 0x3001: case 0x3002: case 0x3003:
      return true;
    default:
      return (cp >= 0x2012 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E);
  }
}

CharClass classify(char32_t cp) {
  if (is_space(cp)) return CharClass::kSpace;
  if (is_joiner(cp)) return CharClass::kJoiner;
  if (is_punct(cp)) return CharClass::kPunct;
  return CharClass::kWord;
}

bool is_sentence_final(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

bool is_closer(char32_t cp) {
  switch (cp) {
    case '\'': case '"': case ')': case ']': case '}': case '_': case '*':
    case 0x2019: case 0x201D: case 0x00BB:
      return true;
    default:
      return false;
  }
}

// Simple lowercase mapping for Latin-1 Supplement and Latin Extended-A.
char32_t fold_latin(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177)) return (cp % 2 == 0) ? cp + 1 : cp;
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  return cp;
}

}  // namespace

bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    char32_t min;
    if ((b0 >> 5) == 0x6) {
      len = 2;
      min = 0x80;
    } else if ((b0 >> 4) == 0xE) {
      len = 3;
      min = 0x800;
    } else if ((b0 >> 3) == 0x1E) {
      len = 4;
      min = 0x10000;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    Decoded d = decode(s, i);
    if (d.len != len || d.cp < min || d.cp > 0x10FFFF || (d.cp >= 0xD800 && d.cp <= 0xDFFF))
      return false;
    i += len;
  }
  return true;
}

RawText make_text(std::string content, std::string source_id) {
  if (!is_valid_utf8(content))
    throw Error(ErrorCode::kInvalidUtf8, "'" + source_id + "' is not valid UTF-8");
  if (content.starts_with("\xEF\xBB\xBF")) content.erase(0, 3);
  return RawText{std::move(content), std::move(source_id)};
}

RawText load_text(const std::filesystem::path& path) {
  return make_text(read_file(path), path.filename().string());
}

bool Token::capitalized() const {
  if (surface.empty()) return false;
  char32_t cp = decode(surface, 0).cp;
  return fold_latin(cp) != cp;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string current;
  bool in_token = false;
  bool next_initial = true;    // document start
  bool pending_final = false;  // saw . ! ? and only closers since
  int newlines = 0;            // newlines in the current whitespace run

  auto flush = [&] {
    if (!in_token) return;
    Token t;
    t.surface = std::move(current);
    t.position = tokens.size();
    t.sentence_initial = next_initial;
    tokens.push_back(std::move(t));
    current.clear();
    in_token = false;
    next_initial = false;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    Decoded d = decode(text, i);
    CharClass cls = classify(d.cp);

    if (cls == CharClass::kJoiner && in_token) {
      std::size_t j = i + d.len;
      if (j < text.size() && classify(decode(text, j).cp) == CharClass::kWord) {
        current.append(text.substr(i, d.len));
        i = j;
        continue;
      }
      cls = CharClass::kPunct;
    } else if (cls == CharClass::kJoiner) {
      cls = CharClass::kPunct;
    }

    switch (cls) {
      case CharClass::kWord:
        if (!in_token) {
          if (pending_final) pending_final = false;
          newlines = 0;
        }
        current.append(text.substr(i, d.len));
        in_token = true;
        break;
      case CharClass::kSpace:
        flush();
        if (pending_final) {
          next_initial = true;
          pending_final = false;
        }
        if (d.cp == '\n' && ++newlines >= 2) next_initial = true;
        break;
      case CharClass::kPunct:
      case CharClass::kJoiner:
        flush();
        newlines = 0;
        if (is_sentence_final(d.cp)) {
          pending_final = true;
        } else if (!(pending_final && is_closer(d.cp))) {
          pending_final = false;
        }
        break;
    }
    i += d.len;
  }
  flush();
  return tokens;
}

std::optional<std::string> normalize_word(std::string_view surface, const PipelineConfig& config) {
  if (surface.empty()) return std::nullopt;
  std::string out;
  out.reserve(surface.size());
  std::size_t i = 0;
  while (i < surface.size()) {
    Decoded d = decode(surface, i);
    if (d.cp < 0x80) {
      char c = static_cast<char>(d.cp);
      if (c >= 'a' && c <= 'z') {
        out += c;
      } else if (c >= 'A' && c <= 'Z') {
        out += static_cast<char>(c - 'A' + 'a');
      } else {
        return std::nullopt;
      }
    } else {
      if (config.extra_letters.empty() || d.cp == 0xFFFD) return std::nullopt;
      std::string lower;
      append_utf8(lower, fold_latin(d.cp));
      if (config.extra_letters.find(lower) == std::string::npos) return std::nullopt;
      out += lower;
    }
    i += d.len;
  }
  return out;
}

Token clean_token(Token token, const PipelineConfig& config) {
  token.normalized = normalize_word(token.surface, config);
  return token;
}

std::vector<Token> clean_tokens(std::vector<Token> tokens, const PipelineConfig& config) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (auto& t : tokens) {
    if (auto n = normalize_word(t.surface, config)) {
      t.normalized = std::move(n);
      t.position = out.size();
      out.push_back(std::move(t));
      continue;
    }
    if (!config.split_hyphens) continue;

    // Only pure hyphen compounds are split; anything with an apostrophe
    // stays dropped.
    bool has_hyphen = false, has_apostrophe = false;
    for (std::size_t i = 0; i < t.surface.size();) {
      Decoded d = decode(t.surface, i);
      has_hyphen |= is_hyphen(d.cp);
      has_apostrophe |= (d.cp == '\'' || d.cp == 0x2019);
      i += d.len;
    }
    if (!has_hyphen || has_apostrophe) continue;

    bool first = true;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= t.surface.size();) {
      Decoded d = i < t.surface.size() ? decode(t.surface, i) : Decoded{'-', 1};
      if (is_hyphen(d.cp)) {
        std::string_view part = std::string_view(t.surface).substr(start, i - start);
        if (auto n = normalize_word(part, config)) {
          Token p;
          p.surface = std::string(part);
          p.normalized = std::move(n);
          p.position = out.size();
          p.sentence_initial = t.sentence_initial && first;
          out.push_back(std::move(p));
        }
        first = false;
        start = i + d.len;
      }
      i += d.len;
    }
  }
  return out;
}

StopwordSet::StopwordSet(std::unordered_set<std::string> words, std::string version)
    : words_(std::move(words)), version_(std::move(version)) {
  for (const auto& w : words_) {
    if (!is_normalized_word(w))
      throw Error(ErrorCode::kInvalidArgument, "stopword is not normalized: '" + w + "'");
  }
}

StopwordSet StopwordSet::parse(std::string_view content, std::string fallback_version) {
  std::unordered_set<std::string> words;
  std::string version = std::move(fallback_version);
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
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
    words.emplace(line);
  }
  return StopwordSet(std::move(words), std::move(version));
}

StopwordSet StopwordSet::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.filename().string());
}

std::vector<std::string> remove_stopwords(std::span<const std::string> words,
                                          const StopwordSet& stops) {
  std::vector<std::string> out;
  out.reserve(words.size());
  std::copy_if(words.begin(), words.end(), std::back_inserter(out),
               [&](const std::string& w) { return !stops.contains(w); });
  return out;
}

}  // namespace lexicov
