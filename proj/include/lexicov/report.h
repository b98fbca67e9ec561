#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexicov/fraction.h"
#include "lexicov/frequency.h"
#include "lexicov/pipeline.h"
#include "lexicov/textnorm.h"
#include "lexicov/wordlist.h"

namespace lexicov {

struct UncoveredWord {
  std::string word;
  std::uint64_t count = 0;
  friend bool operator==(const UncoveredWord&, const UncoveredWord&) = default;
};

struct CoverageRow {
  std::string list_id;
  ListKind list_kind = ListKind::kReference;
  std::size_t list_size = 0;
  Fraction coverage;
  std::string denominator_policy;
  /// The list's own provenance (the config it was built under).
  Provenance config;
  /// Set when the list's normalization differs from the text's; the row is
  /// kept and the coverage is still the plain membership count.
  bool config_mismatch = false;
  std::string mismatch_detail;
  /// Most frequent text headwords missing from the list.
  std::vector<UncoveredWord> uncovered_sample;

  friend bool operator==(const CoverageRow&, const CoverageRow&) = default;
};

struct CoverageReport {
  std::string text_id;
  std::uint64_t tokens = 0;
  std::size_t vocabulary = 0;
  /// Provenance of the text's FrequencyTable, i.e. the full PipelineConfig.
  Provenance config;
  /// Sorted by coverage descending, then list_id.
  std::vector<CoverageRow> rows;
  std::string generated_at;
  std::optional<std::string> error;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

struct NamedList {
  std::string id;
  WordList list;
};

struct EvalOptions {
  std::size_t uncovered_k = 25;
  /// Adds one row for the union of all lists.
  bool union_lists = false;
  int jobs = 1;
  /// Copied into every report; empty when timestamps are suppressed.
  std::string generated_at;
};

/// One report per text. A text without countable tokens yields a report with
/// `error` set and no rows rather than failing the whole evaluation.
std::vector<CoverageReport> evaluate(std::span<const RawText> texts, std::span<const NamedList> lists,
                                     const PipelineConfig& config, const Resources& res,
                                     const EvalOptions& options = {});

/// Single-table evaluation used by evaluate().
CoverageReport evaluate_table(const FrequencyTable& table, std::string text_id,
                              std::span<const NamedList> lists, const EvalOptions& options = {});

NamedList union_of(std::span<const NamedList> lists);

enum class ReportFormat { kJson, kTsv, kMarkdown };
ReportFormat parse_report_format(std::string_view text);

std::string render(std::span<const CoverageReport> reports, ReportFormat format);
inline std::string render(const CoverageReport& report, ReportFormat format) {
  return render(std::span<const CoverageReport>(&report, 1), format);
}

/// Inverse of render(..., kJson). Throws Error(kInvalidArgument) on schema
/// violations.
std::vector<CoverageReport> parse_reports_json(std::string_view json);

/// UTC, ISO 8601, second precision.
std::string utc_timestamp();

}  // namespace lexicov
