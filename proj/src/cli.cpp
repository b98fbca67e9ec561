#include "lexicov/cli.h"

#include <algorithm>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "lexicov/error.h"
#include "lexicov/io.h"
#include "lexicov/kernels.h"
#include "lexicov/ngram.h"
#include "lexicov/pipeline.h"
#include "lexicov/report.h"
#include "lexicov/zipf.h"

#ifndef LEXICOV_VERSION
#define LEXICOV_VERSION "0.0.0"
#endif

namespace lexicov::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Bad flag values; reported with exit status 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigFlags {
  std::string threshold = "0.95";
  bool lemmatize = true;
  bool keep_proper_nouns = true;
  bool remove_stopwords = false;
  std::string lemma_order = "before_count";
  std::optional<std::size_t> size;
  std::string lemma_dict;
  std::string stopwords;
  double proper_threshold = 0.9;
  std::size_t proper_min_count = 3;
  std::string exclude;
  bool split_hyphens = false;
  std::string extra_letters;
};

void add_config_flags(CLI::App* app, ConfigFlags& f, bool with_threshold, bool with_size) {
  if (with_threshold)
    app->add_option("--threshold", f.threshold, "Coverage threshold, e.g. 0.95 or 95%")
        ->capture_default_str();
  if (with_size) app->add_option("--size", f.size, "Cap the list at N headwords");
  app->add_flag("--lemmatize,!--no-lemmatize", f.lemmatize, "Group inflected forms under lemmas")
      ->capture_default_str();
  app->add_flag("--keep-proper-nouns,!--remove-proper-nouns", f.keep_proper_nouns,
                "Keep detected proper nouns (tagged) in the list")
      ->capture_default_str();
  app->add_flag("--remove-stopwords,!--keep-stopwords", f.remove_stopwords,
                "Drop stopwords from the token stream and the denominator")
      ->capture_default_str();
  app->add_option("--lemma-order", f.lemma_order, "before_count or after_cutoff")
      ->capture_default_str();
  app->add_option("--lemma-dict", f.lemma_dict, "Lemma dictionary TSV (default: bundled)");
  app->add_option("--stopwords", f.stopwords, "Stopword file (default: bundled)");
  app->add_option("--proper-threshold", f.proper_threshold,
                  "Share of mid-sentence capitalized uses that marks a proper noun")
      ->capture_default_str();
  app->add_option("--proper-min-count", f.proper_min_count,
                  "Minimum occurrences before a word can be a proper noun")
      ->capture_default_str();
  app->add_option("--exclude", f.exclude, "Word list file whose words are removed from the output");
  app->add_flag("--split-hyphens", f.split_hyphens, "Split hyphenated compounds instead of dropping them");
  app->add_option("--extra-letters", f.extra_letters, "Lowercase letters accepted besides a-z");
}

// Flag-level validation happens here so bad values exit with status 1.
PipelineConfig to_config(const ConfigFlags& f) {
  PipelineConfig c;
  try {
    c.threshold = Fraction::parse(f.threshold);
  } catch (const Error& e) {
    throw UsageError(fmt::format("--threshold: {}", e.what()));
  }
  c.lemmatize = f.lemmatize;
  c.keep_proper_nouns = f.keep_proper_nouns;
  c.remove_stopwords = f.remove_stopwords;
  c.max_size = f.size;
  try {
    c.lemma_order = parse_lemma_order(f.lemma_order);
  } catch (const Error& e) {
    throw UsageError(fmt::format("--lemma-order: {}", e.what()));
  }
  c.proper_threshold = f.proper_threshold;
  c.proper_min_count = f.proper_min_count;
  c.split_hyphens = f.split_hyphens;
  c.extra_letters = f.extra_letters;
  try {
    c.validate();
  } catch (const Error& e) {
    std::string msg = e.what();
    std::string flag = "--" + msg.substr(0, msg.find_first_of(": "));
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (flag == "--max-size") flag = "--size";
    throw UsageError(fmt::format("{} (flag {})", msg, flag));
  }
  return c;
}

Resources load_resources(const ConfigFlags& f) {
  return Resources::load(f.lemma_dict.empty() ? default_lemma_dict_path() : fs::path(f.lemma_dict),
                         f.stopwords.empty() ? default_stopwords_path() : fs::path(f.stopwords));
}

void attach_exclude(PipelineConfig& c, const ConfigFlags& f) {
  if (!f.exclude.empty()) c.exclude_list = read_wordlist(f.exclude);
}

void emit(const std::string& path, std::string_view content, std::ostream& out) {
  if (path.empty() || path == "-")
    out << content;
  else
    write_file_atomic(path, content);
}

std::string list_id_for(const fs::path& p) { return p.stem().string(); }

Json stats_json(const IngestStats& s) {
  Json j;
  j["lines_read"] = s.lines_read;
  j["lines_malformed"] = s.lines_malformed;
  j["records_year_filtered"] = s.records_year_filtered;
  j["tokens_cleaned_away"] = s.tokens_cleaned_away;
  j["lines_contributing"] = s.lines_contributing;
  j["distinct_words_out"] = s.distinct_words_out;
  j["words_below_min_count"] = s.words_below_min_count;
  j["bytes_processed"] = s.bytes_processed;
  return j;
}

Json ingest_json(const IngestResult& r, const IngestOptions& o) {
  Json j;
  j["min_year"] = o.min_year;
  j["min_count"] = o.min_count;
  j["shards"] = Json::array();
  for (const auto& s : r.shards) {
    Json js = stats_json(s.stats);
    js.erase("distinct_words_out");
    js.erase("words_below_min_count");
    j["shards"].push_back({{"shard", s.shard}, {"stats", std::move(js)}});
  }
  j["total"] = stats_json(r.stats);
  return j;
}

struct Globals {
  int jobs = 0;
  bool version = false;
};

int do_swl(const ConfigFlags& f, const std::string& input, const std::string& output,
           int jobs, std::ostream& out, std::ostream& err) {
  PipelineConfig config = to_config(f);
  Resources res = load_resources(f);
  attach_exclude(config, f);
  RawText text = load_text(input);
  SwlBuild b = build_swl_detailed(text, config, res, jobs);
  if (!b.threshold_reached)
    err << fmt::format("warning: threshold {} not reachable after truncation; achieved {}\n",
                       config.threshold.to_decimal(4), b.achieved.to_decimal(4));
  emit(output, format_wordlist(b.list), out);
  return kExitOk;
}

int do_gsl(const ConfigFlags& f, const std::vector<std::string>& inputs, int min_year,
           std::uint64_t min_count, bool threshold_given, const std::string& output,
           const std::string& stats_path, int jobs, std::ostream& out) {
  if (threshold_given && f.size) throw UsageError("--size and --threshold are mutually exclusive");
  PipelineConfig config = to_config(f);
  if (min_year < kMinSaneYear || min_year > kMaxSaneYear)
    throw UsageError(fmt::format("--min-year must be in [{}, {}]", kMinSaneYear, kMaxSaneYear));
  IngestOptions o;
  o.min_year = min_year;
  o.min_count = min_count;
  o.config = config;
  o.jobs = jobs;
  LemmaDictionary dict;
  if (config.lemmatize) dict = load_resources(f).lemmas;
  attach_exclude(config, f);

  std::vector<fs::path> paths(inputs.begin(), inputs.end());
  IngestResult r = aggregate_files(paths, o);
  if (!stats_path.empty()) write_file_atomic(stats_path, ingest_json(r, o).dump(2) + "\n");
  FrequencyTable table = r.table();
  WordList list = build_gsl(table, config, dict);
  std::string sources;
  for (const auto& s : r.shards) sources += (sources.empty() ? "" : ",") + fs::path(s.shard).filename().string();
  list.set_provenance("source", sources);
  list.set_provenance("min_year", std::to_string(min_year));
  list.set_provenance("min_count", std::to_string(min_count));
  emit(output, format_wordlist(list), out);
  return kExitOk;
}

int do_coverage(const ConfigFlags& f, const std::vector<std::string>& texts,
                const std::vector<std::string>& lists, const std::string& format, bool union_lists,
                std::size_t uncovered_k, bool no_timestamp, const std::string& output, int jobs,
                std::ostream& out) {
  PipelineConfig config = to_config(f);
  ReportFormat fmt_kind;
  try {
    fmt_kind = parse_report_format(format);
  } catch (const Error& e) {
    throw UsageError(fmt::format("--format: {}", e.what()));
  }
  Resources res = load_resources(f);
  std::vector<RawText> raw;
  for (const auto& t : texts) raw.push_back(load_text(t));
  std::vector<NamedList> named;
  for (const auto& l : lists) named.push_back({list_id_for(l), read_wordlist(l)});
  EvalOptions eo;
  eo.union_lists = union_lists;
  eo.uncovered_k = uncovered_k;
  eo.jobs = jobs;
  if (!no_timestamp) eo.generated_at = utc_timestamp();
  auto reports = evaluate(raw, named, config, res, eo);
  emit(output, render(reports, fmt_kind), out);
  for (const auto& r : reports)
    if (r.error) return kExitData;
  return kExitOk;
}

int do_zipf(const ConfigFlags& f, const std::string& input, const std::string& output,
            const std::string& summary, std::size_t min_rank, std::size_t max_rank,
            double sensitivity, int jobs, std::ostream& out) {
  PipelineConfig config = to_config(f);
  if (sensitivity <= 0.0 || sensitivity >= 1.0)
    throw UsageError("--knee-sensitivity must be in (0, 1)");
  Resources res = load_resources(f);
  RawText text = load_text(input);
  FrequencyTable table = build_table(text, config, res, jobs);
  RankedList ranked = rank(table);

  std::string csv = "rank,count,coverage,cum_coverage,log_rank,log_count\n";
  auto points = zipf_points(ranked);
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& e = ranked[i];
    csv += fmt::format("{},{},{},{},{:.6f},{:.6f}\n", e.rank, e.count, e.coverage.to_decimal(8),
                       e.cum_coverage.to_decimal(8), points[i].log_rank, points[i].log_count);
  }

  Json j;
  j["source"] = text.source_id;
  j["tokens"] = table.total();
  j["vocabulary"] = table.size();
  RankRange range = default_rank_range(ranked);
  if (min_rank) range.lo = min_rank;
  if (max_rank) range.hi = max_rank;
  try {
    ZipfFit fit = fit_zipf(ranked, range);
    j["fit"] = {{"exponent", fit.exponent},       {"log_intercept", fit.log_intercept},
                {"r_squared", fit.r_squared},     {"rank_lo", fit.range.lo},
                {"rank_hi", fit.range.hi},        {"points", fit.points},
                {"degenerate", fit.degenerate}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRangeTooSmall) throw;
    j["fit"] = nullptr;
    j["fit_error"] = e.what();
  }
  KneeDiagnostic knee = knee_point(marginal_gains(ranked), sensitivity);
  j["knee"] = {{"verdict", knee.verdict == KneeVerdict::kFound ? "FOUND" : "NO_MEANINGFUL_KNEE"},
               {"rank", knee.knee_rank ? Json(*knee.knee_rank) : Json(nullptr)},
               {"max_distance", knee.max_distance},
               {"sensitivity", sensitivity}};
  std::string summary_text = j.dump(2) + "\n";

  if (output.empty() || output == "-") {
    out << csv;
    if (!summary.empty()) write_file_atomic(summary, summary_text);
  } else {
    write_file_atomic(output, csv);
    emit(summary, summary_text, out);
  }
  return kExitOk;
}

int do_ingest_stats(const std::vector<std::string>& inputs, int min_year, std::uint64_t min_count,
                    const ConfigFlags& f, const std::string& output, int jobs, std::ostream& out) {
  if (min_year < kMinSaneYear || min_year > kMaxSaneYear)
    throw UsageError(fmt::format("--min-year must be in [{}, {}]", kMinSaneYear, kMaxSaneYear));
  IngestOptions o;
  o.min_year = min_year;
  o.min_count = min_count;
  o.config.split_hyphens = f.split_hyphens;
  o.config.extra_letters = f.extra_letters;
  o.jobs = jobs;
  std::vector<fs::path> paths(inputs.begin(), inputs.end());
  IngestResult r = aggregate_files(paths, o);
  emit(output, ingest_json(r, o).dump(2) + "\n", out);
  return kExitOk;
}

// SWL from one text, evaluated next to any reference lists, as a results
// table; vocabulary sizes go to the optional summary.
int do_replicate(const ConfigFlags& f, const std::string& input,
                 const std::vector<std::string>& lists, const std::string& output,
                 const std::string& swl_output, const std::string& summary, int jobs,
                 std::ostream& out) {
  PipelineConfig config = to_config(f);
  Resources res = load_resources(f);
  attach_exclude(config, f);
  RawText text = load_text(input);
  SwlBuild b = build_swl_detailed(text, config, res, jobs);
  if (!swl_output.empty()) write_wordlist(swl_output, b.list);

  std::vector<NamedList> named;
  named.push_back({"swl", b.list});
  for (const auto& l : lists) named.push_back({list_id_for(l), read_wordlist(l)});
  EvalOptions eo;
  eo.jobs = jobs;
  CoverageReport report = evaluate_table(b.table, text.source_id, named, eo);
  emit(output, render(report, ReportFormat::kTsv), out);

  if (!summary.empty()) {
    Json j;
    j["source"] = text.source_id;
    j["tokens"] = b.table.total();
    j["threshold"] = config.threshold.to_decimal(4);
    j["raw_vocabulary"] = b.surface_vocabulary;
    j["headword_vocabulary"] = b.headword_vocabulary;
    j["swl_size"] = b.list.size();
    j["swl_coverage"] = b.achieved.to_decimal(4);
    j["swl_share_of_vocabulary"] =
        Fraction(b.list.size(), std::max<std::size_t>(b.headword_vocabulary, 1)).to_decimal(4);
    write_file_atomic(summary, j.dump(2) + "\n");
  }
  return kExitOk;
}

void print_version(std::ostream& out) {
  out << "lexicov " << LEXICOV_VERSION << "\n";
  try {
    out << "lemma_dict " << LemmaDictionary::load(default_lemma_dict_path()).version() << "\n";
  } catch (const Error&) {
    out << "lemma_dict missing (" << default_lemma_dict_path().string() << ")\n";
  }
  try {
    out << "stopwords " << StopwordSet::load(default_stopwords_path()).version() << "\n";
  } catch (const Error&) {
    out << "stopwords missing (" << default_stopwords_path().string() << ")\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequency-based word lists and lexical coverage", "lexicov"};
  app.set_help_all_flag("--help-all");
  Globals g;
  app.add_flag("--version", g.version, "Print tool and data versions");
  app.add_option("--jobs,-j", g.jobs, "Worker threads (default: available cores)");
  app.require_subcommand(0, 1);

  ConfigFlags swl_f, gsl_f, cov_f, zipf_f, ing_f, rep_f;
  std::string input, output, stats_path, format = "json", summary, swl_output;
  std::vector<std::string> inputs, lists;
  int min_year = 1800;
  std::uint64_t min_count = 0;
  bool union_lists = false, no_timestamp = false;
  std::size_t uncovered_k = 25, min_rank = 0, max_rank = 0;
  double sensitivity = kDefaultKneeSensitivity;

  auto* swl = app.add_subcommand("swl", "Build a specialized word list from one text");
  swl->add_option("--input,-i", input, "UTF-8 text file")->required();
  swl->add_option("--output,-o", output, "Word list file (default: stdout)");
  add_config_flags(swl, swl_f, true, true);

  auto* gsl = app.add_subcommand("gsl", "Build a general list from n-gram unigram shards");
  gsl->add_option("--ngram", inputs, "Shard files or directories (plain or gzip TSV)")->required();
  gsl->add_option("--min-year", min_year, "Drop records before this year")->capture_default_str();
  gsl->add_option("--min-count", min_count, "Drop words with fewer total matches");
  gsl->add_option("--output,-o", output, "Word list file (default: stdout)");
  gsl->add_option("--stats", stats_path, "Write ingestion statistics as JSON");
  add_config_flags(gsl, gsl_f, true, true);

  auto* cov = app.add_subcommand("coverage", "Coverage of word lists on texts");
  cov->add_option("--text", inputs, "UTF-8 text files")->required();
  cov->add_option("--list", lists, "Word list files")->required();
  cov->add_option("--format", format, "json, tsv or md")->capture_default_str();
  cov->add_option("--output,-o", output, "Report file (default: stdout)");
  cov->add_flag("--union", union_lists, "Add a row for the union of all lists");
  cov->add_option("--uncovered", uncovered_k, "Uncovered words sampled per row")->capture_default_str();
  cov->add_flag("--no-timestamp", no_timestamp, "Leave generated_at empty");
  add_config_flags(cov, cov_f, false, false);

  auto* zipf = app.add_subcommand("zipf", "Rank/frequency table, Zipf fit and knee diagnostic");
  zipf->add_option("--input,-i", input, "UTF-8 text file")->required();
  zipf->add_option("--output,-o", output, "CSV file (default: stdout)");
  zipf->add_option("--summary", summary, "Fit summary JSON (default: stdout when --output is set)");
  zipf->add_option("--min-rank", min_rank, "First rank of the fit (default 10)");
  zipf->add_option("--max-rank", max_rank, "Last rank of the fit (default: last with count >= 3)");
  zipf->add_option("--knee-sensitivity", sensitivity, "Knee distance threshold")->capture_default_str();
  add_config_flags(zipf, zipf_f, false, false);

  auto* ing = app.add_subcommand("ingest-stats", "Per-shard ingestion accounting");
  ing->add_option("--ngram", inputs, "Shard files or directories")->required();
  ing->add_option("--min-year", min_year, "Drop records before this year")->capture_default_str();
  ing->add_option("--min-count", min_count, "Drop words with fewer total matches");
  ing->add_option("--output,-o", output, "JSON file (default: stdout)");
  ing->add_flag("--split-hyphens", ing_f.split_hyphens, "Split hyphenated compounds");
  ing->add_option("--extra-letters", ing_f.extra_letters, "Lowercase letters accepted besides a-z");

  auto* rep = app.add_subcommand("replicate", "SWL build plus results table on one text");
  rep->add_option("--input,-i", input, "UTF-8 text file")->required();
  rep->add_option("--list", lists, "Reference word lists to evaluate alongside the SWL");
  rep->add_option("--output,-o", output, "Results TSV (default: stdout)");
  rep->add_option("--swl-output", swl_output, "Also write the SWL");
  rep->add_option("--summary", summary, "Vocabulary and compression summary JSON");
  add_config_flags(rep, rep_f, true, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (g.version) {
    print_version(out);
    return kExitOk;
  }
  if (g.jobs < 0) {
    err << "error: --jobs must be >= 0\n";
    return kExitUsage;
  }
  const int jobs = g.jobs > 0 ? g.jobs : kernels::default_jobs();

  try {
    if (*swl) return do_swl(swl_f, input, output, jobs, out, err);
    if (*gsl)
      return do_gsl(gsl_f, inputs, min_year, min_count, gsl->count("--threshold") > 0, output,
                    stats_path, jobs, out);
    if (*cov)
      return do_coverage(cov_f, inputs, lists, format, union_lists, uncovered_k, no_timestamp,
                         output, jobs, out);
    if (*zipf)
      return do_zipf(zipf_f, input, output, summary, min_rank, max_rank, sensitivity, jobs, out);
    if (*ing) return do_ingest_stats(inputs, min_year, min_count, ing_f, output, jobs, out);
    if (*rep) return do_replicate(rep_f, input, lists, output, swl_output, summary, jobs, out);
    err << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace lexicov::cli
