#include "lexicov/report.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <unordered_set>

#include <fmt/format.h>
#include <json.hpp>

#include "lexicov/error.h"
#include "lexicov/kernels.h"

namespace lexicov {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kSchema = "lexicov-coverage-1";

std::string mismatch_detail(const Provenance& list, const Provenance& table) {
  std::string out;
  for (std::string_view key : {"lemmatize", "lemma_dict"}) {
    auto a = provenance_value(list, key);
    auto b = provenance_value(table, key);
    if (a && b && *a != *b) {
      if (!out.empty()) out += "; ";
      out += fmt::format("{}: list={} text={}", key, *a, *b);
    }
  }
  return out;
}

CoverageRow make_row(const NamedList& named, const FrequencyTable& table, const RankedList& ranked,
                     std::size_t k) {
  CoverageRow row;
  row.list_id = named.id;
  row.list_kind = named.list.kind();
  row.list_size = named.list.size();
  row.denominator_policy = provenance_value(table.provenance(), "denominator").value_or("all_tokens");
  row.config = named.list.provenance();
  row.mismatch_detail = mismatch_detail(named.list.provenance(), table.provenance());
  row.config_mismatch = !row.mismatch_detail.empty();

  std::uint64_t covered = 0;
  for (const auto& w : named.list.headwords()) covered += table.count(w);
  row.coverage = Fraction(covered, table.total());

  for (const auto& e : ranked.entries) {
    if (row.uncovered_sample.size() >= k) break;
    if (!named.list.contains(e.headword)) row.uncovered_sample.push_back({e.headword, e.count});
  }
  return row;
}

void sort_rows(std::vector<CoverageRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const CoverageRow& a, const CoverageRow& b) {
    if (a.coverage != b.coverage) return a.coverage > b.coverage;
    return a.list_id < b.list_id;
  });
}

Json provenance_json(const Provenance& p) {
  Json o = Json::object();
  for (const auto& [k, v] : p) o[k] = v;
  return o;
}

Provenance provenance_from(const Json& o) {
  if (!o.is_object()) throw Error(ErrorCode::kInvalidArgument, "config must be an object");
  Provenance p;
  for (const auto& [k, v] : o.items()) p.emplace_back(k, v.get<std::string>());
  return p;
}

std::string tsv_field(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), '\t', ' ');
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

std::string md_field(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string percent(const Fraction& f) {
  return Fraction(f.num() * 100, f.den()).to_decimal(2);
}

std::string sample_text(const CoverageRow& row) {
  std::string out;
  for (const auto& u : row.uncovered_sample) {
    if (!out.empty()) out += ',';
    out += fmt::format("{}:{}", u.word, u.count);
  }
  return out;
}

}  // namespace

NamedList union_of(std::span<const NamedList> lists) {
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  std::string id;
  Provenance p;
  for (const auto& l : lists) {
    id += (id.empty() ? "" : "+") + l.id;
    for (const auto& w : l.list.headwords())
      if (seen.insert(w).second) words.push_back(w);
    // Normalization keys are shared only if every member agrees.
    for (std::string_view key : {"lemmatize", "lemma_dict"}) {
      auto v = l.list.provenance_value(key);
      if (!v) continue;
      auto cur = provenance_value(p, key);
      if (!cur) set_provenance(p, std::string(key), *v);
      else if (*cur != *v) set_provenance(p, std::string(key), "mixed");
    }
  }
  set_provenance(p, "union_of", id);
  return {"union(" + id + ")", WordList(ListKind::kReference, std::move(words), std::move(p))};
}

CoverageReport evaluate_table(const FrequencyTable& table, std::string text_id,
                              std::span<const NamedList> lists, const EvalOptions& options) {
  CoverageReport report;
  report.text_id = std::move(text_id);
  report.tokens = table.total();
  report.vocabulary = table.size();
  report.config = table.provenance();
  report.generated_at = options.generated_at;
  RankedList ranked = rank(table);
  for (const auto& l : lists) report.rows.push_back(make_row(l, table, ranked, options.uncovered_k));
  if (options.union_lists && !lists.empty())
    report.rows.push_back(make_row(union_of(lists), table, ranked, options.uncovered_k));
  sort_rows(report.rows);
  return report;
}

std::vector<CoverageReport> evaluate(std::span<const RawText> texts, std::span<const NamedList> lists,
                                     const PipelineConfig& config, const Resources& res,
                                     const EvalOptions& options) {
  config.validate();
  const int jobs = options.jobs > 0 ? options.jobs : kernels::default_jobs();
  std::vector<CoverageReport> out(texts.size());
  std::vector<std::string> failures(texts.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      try {
        FrequencyTable table = build_table(texts[i], config, res, 1);
        out[i] = evaluate_table(table, texts[i].source_id, lists, options);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptyInput) throw;
        out[i].text_id = texts[i].source_id;
        out[i].generated_at = options.generated_at;
        out[i].error = std::string(to_string(e.code())) + ": " + e.what();
      }
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (const auto& f : failures)
    if (!f.empty()) throw Error(ErrorCode::kInvalidArgument, f);
  return out;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "tsv") return ReportFormat::kTsv;
  if (text == "md" || text == "markdown") return ReportFormat::kMarkdown;
  throw Error(ErrorCode::kInvalidArgument, "unknown report format '" + std::string(text) + "'");
}

std::string render(std::span<const CoverageReport> reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: {
      Json doc;
      doc["schema"] = kSchema;
      doc["reports"] = Json::array();
      for (const auto& r : reports) {
        Json jr;
        jr["text_id"] = r.text_id;
        jr["tokens"] = r.tokens;
        jr["vocabulary"] = r.vocabulary;
        jr["generated_at"] = r.generated_at;
        jr["error"] = r.error ? Json(*r.error) : Json(nullptr);
        jr["config"] = provenance_json(r.config);
        jr["rows"] = Json::array();
        for (const auto& row : r.rows) {
          Json j;
          j["list_id"] = row.list_id;
          j["list_kind"] = to_string(row.list_kind);
          j["list_size"] = row.list_size;
          j["coverage"] = row.coverage.to_string();
          j["coverage_decimal"] = row.coverage.to_decimal(4);
          j["denominator_policy"] = row.denominator_policy;
          j["config_mismatch"] = row.config_mismatch;
          j["mismatch_detail"] = row.mismatch_detail;
          j["config"] = provenance_json(row.config);
          j["uncovered_sample"] = Json::array();
          for (const auto& u : row.uncovered_sample)
            j["uncovered_sample"].push_back({{"word", u.word}, {"count", u.count}});
          jr["rows"].push_back(std::move(j));
        }
        doc["reports"].push_back(std::move(jr));
      }
      return doc.dump(2) + "\n";
    }
    case ReportFormat::kTsv: {
      std::string out =
          "text\tlist\tkind\tsize\tcoverage\tcoverage_exact\tdenominator\tconfig_mismatch\tuncovered\n";
      for (const auto& r : reports)
        for (const auto& row : r.rows)
          out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", tsv_field(r.text_id),
                             tsv_field(row.list_id), to_string(row.list_kind), row.list_size,
                             row.coverage.to_decimal(4), row.coverage.to_string(),
                             row.denominator_policy, row.config_mismatch ? "yes" : "no",
                             sample_text(row));
      return out;
    }
    case ReportFormat::kMarkdown: {
      std::string out;
      for (const auto& r : reports) {
        out += fmt::format("## {}\n\n", md_field(r.text_id));
        if (r.error) {
          out += fmt::format("Error: {}\n\n", md_field(*r.error));
          continue;
        }
        out += fmt::format("Tokens: {}, vocabulary: {}", r.tokens, r.vocabulary);
        if (!r.generated_at.empty()) out += fmt::format(", generated {}", r.generated_at);
        out += "\n\n| List | Kind | Size | Coverage | Note |\n|---|---|---:|---:|---|\n";
        for (const auto& row : r.rows)
          out += fmt::format("| {} | {} | {} | {}% | {} |\n", md_field(row.list_id),
                             to_string(row.list_kind), row.list_size,
                             percent(row.coverage),
                             row.config_mismatch ? "config mismatch: " + md_field(row.mismatch_detail)
                                                 : "");
        out += "\n";
      }
      if (reports.empty()) out += "No reports.\n";
      return out;
    }
  }
  return {};
}

std::vector<CoverageReport> parse_reports_json(std::string_view text) {
  std::vector<CoverageReport> out;
  try {
    Json doc = Json::parse(text);
    if (doc.at("schema").get<std::string>() != kSchema)
      throw Error(ErrorCode::kInvalidArgument, "unknown report schema");
    for (const auto& jr : doc.at("reports")) {
      CoverageReport r;
      r.text_id = jr.at("text_id").get<std::string>();
      r.tokens = jr.at("tokens").get<std::uint64_t>();
      r.vocabulary = jr.at("vocabulary").get<std::size_t>();
      r.generated_at = jr.at("generated_at").get<std::string>();
      if (!jr.at("error").is_null()) r.error = jr.at("error").get<std::string>();
      r.config = provenance_from(jr.at("config"));
      for (const auto& j : jr.at("rows")) {
        CoverageRow row;
        row.list_id = j.at("list_id").get<std::string>();
        row.list_kind = parse_list_kind(j.at("list_kind").get<std::string>());
        row.list_size = j.at("list_size").get<std::size_t>();
        row.coverage = Fraction::parse(j.at("coverage").get<std::string>());
        row.denominator_policy = j.at("denominator_policy").get<std::string>();
        row.config_mismatch = j.at("config_mismatch").get<bool>();
        row.mismatch_detail = j.at("mismatch_detail").get<std::string>();
        row.config = provenance_from(j.at("config"));
        for (const auto& u : j.at("uncovered_sample"))
          row.uncovered_sample.push_back(
              {u.at("word").get<std::string>(), u.at("count").get<std::uint64_t>()});
        r.rows.push_back(std::move(row));
      }
      out.push_back(std::move(r));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace lexicov
