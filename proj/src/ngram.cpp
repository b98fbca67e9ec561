#include "lexicov/ngram.h"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <memory>

#include <fmt/format.h>

#include "lexicov/error.h"
#include "lexicov/kernels.h"
#include "lexicov/textnorm.h"

namespace lexicov {

namespace {

constexpr std::array<std::string_view, 14> kPosTags = {
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP", "NUM", "CONJ", "PRT", "X", ".", "PROPN", "CCONJ"};
constexpr std::array<std::string_view, 3> kMarkers = {"START", "END", "ROOT"};

bool is_tag(std::string_view s) {
  return std::find(kPosTags.begin(), kPosTags.end(), s) != kPosTags.end();
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Applies one TSV line to a partial result.
struct Accumulator {
  const IngestOptions& options;
  WordCounts counts;
  IngestStats stats;

  void line(std::string_view raw, std::uint64_t bytes) {
    ++stats.lines_read;
    stats.bytes_processed += bytes;
    auto rec = try_parse_ngram_row(raw);
    if (!rec) {
      ++stats.lines_malformed;
      return;
    }
    record(rec->token, rec->year, rec->match_count);
  }

  void record(std::string_view token, int year, std::uint64_t match_count) {
    if (year < options.min_year) {
      ++stats.records_year_filtered;
      return;
    }
    auto bare = strip_pos_tag(token);
    std::optional<std::string> word;
    if (bare) word = normalize_word(*bare, options.config);
    if (!word) {
      ++stats.tokens_cleaned_away;
      return;
    }
    ++stats.lines_contributing;
    counts[std::move(*word)] += match_count;
  }
};

void finish(IngestResult& result, const IngestOptions& options) {
  for (auto it = result.counts.begin(); it != result.counts.end();) {
    if (it->second == 0 || it->second < options.min_count) {
      ++result.stats.words_below_min_count;
      it = result.counts.erase(it);
    } else {
      ++it;
    }
  }
  result.stats.distinct_words_out = result.counts.size();
}

struct WorkUnit {
  std::size_t shard = 0;
  bool gzip = false;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

void feed_gzip(const std::filesystem::path& path, Accumulator& acc) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (!f) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::unique_ptr<gzFile_s, int (*)(gzFile)> guard(f, gzclose);
  gzbuffer(f, 1 << 18);
  std::array<char, 1 << 16> buf;
  std::string line;
  for (;;) {
    char* got = gzgets(f, buf.data(), static_cast<int>(buf.size()));
    if (!got) break;
    std::string_view piece(got);
    bool complete = !piece.empty() && piece.back() == '\n';
    line.append(piece);
    if (!complete && !gzeof(f)) continue;
    std::uint64_t bytes = line.size();
    if (complete) line.pop_back();
    acc.line(line, bytes);
    line.clear();
  }
  int errnum = 0;
  const char* msg = gzerror(f, &errnum);
  if (errnum != Z_OK && errnum != Z_STREAM_END)
    throw Error(ErrorCode::kIo, "'" + path.string() + "': " + msg);
}

// Processes every line that starts inside [begin, end).
void feed_range(const std::filesystem::path& path, std::uint64_t begin, std::uint64_t end,
                Accumulator& acc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::uint64_t pos = begin;
  std::string line;
  if (begin > 0) {
    in.seekg(static_cast<std::streamoff>(begin - 1));
    char prev = 0;
    in.get(prev);
    if (prev != '\n') {
      std::getline(in, line);
      pos += line.size() + (in.eof() ? 0 : 1);
    }
  }
  while (pos < end && std::getline(in, line)) {
    std::uint64_t bytes = line.size() + (in.eof() ? 0 : 1);
    pos += bytes;
    acc.line(line, bytes);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error in '" + path.string() + "'");
}

}  // namespace

IngestStats& IngestStats::operator+=(const IngestStats& o) {
  lines_read += o.lines_read;
  lines_malformed += o.lines_malformed;
  records_year_filtered += o.records_year_filtered;
  tokens_cleaned_away += o.tokens_cleaned_away;
  lines_contributing += o.lines_contributing;
  bytes_processed += o.bytes_processed;
  return *this;
}

std::optional<NgramRecord> try_parse_ngram_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::array<std::string_view, 4> f;
  std::size_t n = 0;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    if (n == f.size()) return std::nullopt;
    f[n++] = line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start);
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  if (n != 4 || f[0].empty()) return std::nullopt;
  NgramRecord r;
  if (!parse_int(f[1], r.year) || !parse_int(f[2], r.match_count) ||
      !parse_int(f[3], r.volume_count))
    return std::nullopt;
  if (r.year < kMinSaneYear || r.year > kMaxSaneYear) return std::nullopt;
  r.token = std::string(f[0]);
  return r;
}

NgramRecord parse_ngram_row(std::string_view line) {
  auto r = try_parse_ngram_row(line);
  if (!r) throw Error(ErrorCode::kMalformedRow, "malformed n-gram row: '" + std::string(line) + "'");
  return *r;
}

std::optional<std::string_view> strip_pos_tag(std::string_view token) {
  if (token.size() > 2 && token.front() == '_' && token.back() == '_') {
    std::string_view inner = token.substr(1, token.size() - 2);
    if (is_tag(inner) ||
        std::find(kMarkers.begin(), kMarkers.end(), inner) != kMarkers.end())
      return std::nullopt;
  }
  std::size_t us = token.rfind('_');
  if (us != std::string_view::npos && is_tag(token.substr(us + 1))) {
    if (us == 0) return std::nullopt;
    return token.substr(0, us);
  }
  return token;
}

FrequencyTable IngestResult::table() const {
  if (counts.empty()) throw Error(ErrorCode::kEmptyInput, "no n-gram records survived filtering");
  Provenance p;
  p.emplace_back("lines_read", std::to_string(stats.lines_read));
  p.emplace_back("lines_contributing", std::to_string(stats.lines_contributing));
  return FrequencyTable(counts, std::move(p));
}

IngestResult aggregate(std::span<const NgramRecord> rows, const IngestOptions& options) {
  Accumulator acc{options, {}, {}};
  for (const auto& r : rows) {
    ++acc.stats.lines_read;
    if (r.year < kMinSaneYear || r.year > kMaxSaneYear) {
      ++acc.stats.lines_malformed;
      continue;
    }
    acc.record(r.token, r.year, r.match_count);
  }
  IngestResult out{std::move(acc.counts), acc.stats, {}};
  finish(out, options);
  return out;
}

IngestResult aggregate_stream(std::istream& in, const IngestOptions& options) {
  Accumulator acc{options, {}, {}};
  std::string line;
  while (std::getline(in, line)) acc.line(line, line.size() + (in.eof() ? 0 : 1));
  IngestResult out{std::move(acc.counts), acc.stats, {}};
  finish(out, options);
  return out;
}

bool is_gzip_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  unsigned char magic[2] = {0, 0};
  in.read(reinterpret_cast<char*>(magic), 2);
  return in.gcount() == 2 && magic[0] == 0x1f && magic[1] == 0x8b;
}

std::vector<std::filesystem::path> expand_inputs(std::span<const std::filesystem::path> inputs) {
  std::vector<std::filesystem::path> out;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (std::filesystem::is_directory(in, ec)) {
      std::vector<std::filesystem::path> files;
      for (const auto& e : std::filesystem::directory_iterator(in))
        if (e.is_regular_file()) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else if (std::filesystem::exists(in, ec)) {
      out.push_back(in);
    } else {
      throw Error(ErrorCode::kIo, "no such input '" + in.string() + "'");
    }
  }
  return out;
}

IngestResult aggregate_files(std::span<const std::filesystem::path> inputs,
                             const IngestOptions& options) {
  if (options.chunk_bytes == 0) throw Error(ErrorCode::kInvalidArgument, "chunk size must be positive");
  const int jobs = options.jobs > 0 ? options.jobs : kernels::default_jobs();
  std::vector<std::filesystem::path> files = expand_inputs(inputs);

  std::vector<WorkUnit> units;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (is_gzip_file(files[i])) {
      units.push_back({i, true, 0, 0});
      continue;
    }
    std::uint64_t size = std::filesystem::file_size(files[i]);
    std::uint64_t pieces = std::max<std::uint64_t>(
        {1, static_cast<std::uint64_t>(jobs), (size + options.chunk_bytes - 1) / options.chunk_bytes});
    pieces = std::min<std::uint64_t>(pieces, std::max<std::uint64_t>(size, 1));
    for (std::uint64_t k = 0; k < pieces; ++k)
      units.push_back({i, false, size * k / pieces, size * (k + 1) / pieces});
  }

  std::vector<WordCounts> partial(units.size());
  std::vector<IngestStats> unit_stats(units.size());
  std::vector<std::string> failures(units.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::size_t u = 0; u < units.size(); ++u) {
    try {
      Accumulator acc{options, {}, {}};
      const auto& unit = units[u];
      if (unit.gzip)
        feed_gzip(files[unit.shard], acc);
      else
        feed_range(files[unit.shard], unit.begin, unit.end, acc);
      partial[u] = std::move(acc.counts);
      unit_stats[u] = acc.stats;
    } catch (const std::exception& e) {
      failures[u] = e.what();
    }
  }

  IngestResult out;
  out.shards.resize(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) out.shards[i].shard = files[i].string();
  std::vector<bool> failed(files.size(), false);
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (!failures[u].empty()) failed[units[u].shard] = true;
    out.shards[units[u].shard].stats += unit_stats[u];
  }
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (failures[u].empty()) continue;
    std::size_t done = std::count(failed.begin(), failed.end(), false);
    throw Error(ErrorCode::kIo, fmt::format("shard '{}' failed: {} ({} of {} shards completed)",
                                            files[units[u].shard].string(), failures[u], done,
                                            files.size()));
  }

  out.counts = kernels::merge_all(partial, jobs);
  for (const auto& s : out.shards) out.stats += s.stats;
  finish(out, options);
  return out;
}

FrequencyTable lemma_merge(const FrequencyTable& table, const LemmaDictionary& dict) {
  WordCounts merged;
  merged.reserve(table.size());
  for (const auto& [word, count] : table.counts()) merged[lemmatize(word, dict)] += count;
  Provenance p = table.provenance();
  set_provenance(p, "lemma_dict", dict.version());
  return FrequencyTable(std::move(merged), std::move(p));
}

WordList build_gsl(const FrequencyTable& table, const PipelineConfig& config,
                   const LemmaDictionary& dict) {
  config.validate();
  FrequencyTable merged = config.lemmatize ? lemma_merge(table, dict) : table;
  RankedList ranked = rank(merged);

  std::size_t take = 0;
  Fraction achieved;
  Provenance p = config.snapshot();
  set_provenance(p, "lemma_dict", config.lemmatize ? dict.version() : "none");
  if (config.max_size) {
    take = std::min(*config.max_size, ranked.size());
    achieved = take ? ranked[take - 1].cum_coverage : Fraction(0, 1);
    set_provenance(p, "selection", "size");
  } else {
    CutoffResult c = cutoff(ranked, config.threshold);
    take = c.p;
    achieved = c.achieved;
    set_provenance(p, "selection", "threshold");
  }
  set_provenance(p, "tokens", std::to_string(merged.total()));
  set_provenance(p, "vocabulary", std::to_string(merged.size()));
  set_provenance(p, "achieved", achieved.to_string());
  set_provenance(p, "achieved_decimal", achieved.to_decimal(4));

  std::vector<std::string> words;
  words.reserve(take);
  for (std::size_t i = 0; i < take; ++i) words.push_back(ranked[i].headword);
  WordList list(ListKind::kGsl, std::move(words), std::move(p));
  if (config.exclude_list) list = exclude_known(list, *config.exclude_list);
  return list;
}

}  // namespace lexicov
