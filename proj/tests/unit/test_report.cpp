#include <gtest/gtest.h>

#include <json.hpp>

#include "lexicov/error.h"
#include "lexicov/report.h"
#include "test_support.h"

using namespace lexicov;
using testing_support::resources;

namespace {

FrequencyTable toy_table() {
  return FrequencyTable(WordCounts{{"dog", 20}, {"cat", 10}, {"fish", 600}, {"bird", 370}},
                        {{"denominator", "all_tokens"}, {"lemmatize", "true"}});
}

CoverageReport sample_report() {
  std::vector<NamedList> lists{
      {"pets", WordList(ListKind::kReference, {"dog", "cat"})},
      {"fishy", WordList(ListKind::kSwl, {"fish"}, {{"lemmatize", "true"}, {"threshold", "1/2"}})},
      {"surface", WordList(ListKind::kGsl, {"bird"}, {{"lemmatize", "false"}})},
  };
  EvalOptions o;
  o.uncovered_k = 2;
  o.union_lists = true;
  o.generated_at = "2026-01-01T00:00:00Z";
  return evaluate_table(toy_table(), "toy", lists, o);
}

}  // namespace

TEST(Evaluate, RowsSortedWithExactCoverage) {
  auto r = sample_report();
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.rows[0].list_id, "union(pets+fishy+surface)");
  EXPECT_EQ(r.rows[0].coverage, Fraction(1, 1));
  EXPECT_EQ(r.rows[1].list_id, "fishy");
  EXPECT_EQ(r.rows[3].list_id, "pets");
  EXPECT_EQ(r.rows[3].coverage, Fraction(3, 100));
  EXPECT_EQ(r.rows[3].list_size, 2u);
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_GE(r.rows[i - 1].coverage, r.rows[i].coverage);
}

TEST(Evaluate, MismatchIsFlaggedNotDropped) {
  auto r = sample_report();
  auto it = std::find_if(r.rows.begin(), r.rows.end(), [](auto& x) { return x.list_id == "surface"; });
  ASSERT_NE(it, r.rows.end());
  EXPECT_TRUE(it->config_mismatch);
  EXPECT_NE(it->mismatch_detail.find("lemmatize"), std::string::npos);
  EXPECT_EQ(it->coverage, Fraction(370, 1000));
  EXPECT_TRUE(r.rows[0].config_mismatch);  // the union mixes settings
}

TEST(Evaluate, UncoveredSampleIsAbsentFromListAndPresentInText) {
  auto r = sample_report();
  for (const auto& row : r.rows) {
    EXPECT_LE(row.uncovered_sample.size(), 2u);
    for (const auto& u : row.uncovered_sample) {
      EXPECT_EQ(toy_table().count(u.word), u.count);
      EXPECT_GT(u.count, 0u);
    }
  }
  auto pets = std::find_if(r.rows.begin(), r.rows.end(), [](auto& x) { return x.list_id == "pets"; });
  EXPECT_EQ(pets->uncovered_sample,
            (std::vector<UncoveredWord>{{"fish", 600}, {"bird", 370}}));
}

TEST(Evaluate, SelfCoverageOfSwl) {
  RawText text = load_text(testing_support::test_data("corpus/alice.txt"));
  PipelineConfig c;
  auto b = build_swl_detailed(text, c, resources());
  std::vector<NamedList> lists{{"swl", b.list}};
  auto reports = evaluate(std::vector<RawText>{text}, lists, c, resources());
  ASSERT_EQ(reports.size(), 1u);
  ASSERT_EQ(reports[0].rows.size(), 1u);
  EXPECT_EQ(reports[0].rows[0].coverage, b.cutoff.achieved);
  EXPECT_GE(reports[0].rows[0].coverage, c.threshold);
  EXPECT_FALSE(reports[0].rows[0].config_mismatch);
}

TEST(Evaluate, EmptyTextGetsErrorReport) {
  std::vector<RawText> texts{make_text("1 2 3", "numbers"), make_text("a cat", "words")};
  std::vector<NamedList> lists{{"l", WordList(ListKind::kReference, {"cat"})}};
  for (int jobs : {1, 2}) {
    EvalOptions o;
    o.jobs = jobs;
    auto r = evaluate(texts, lists, PipelineConfig{}, resources(), o);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_TRUE(r[0].error);
    EXPECT_TRUE(r[0].rows.empty());
    EXPECT_FALSE(r[1].error);
    EXPECT_EQ(r[1].rows[0].coverage, Fraction(1, 2));
  }
}

TEST(Render, JsonRoundTrip) {
  std::vector<CoverageReport> reports{sample_report(), CoverageReport{}};
  reports[1].text_id = "broken";
  reports[1].error = "EMPTY_INPUT: nothing";
  auto json = render(reports, ReportFormat::kJson);
  EXPECT_EQ(parse_reports_json(json), reports);
  EXPECT_EQ(render(parse_reports_json(json), ReportFormat::kJson), json);
  auto doc = nlohmann::json::parse(json);
  EXPECT_EQ(doc["reports"][0]["rows"][3]["coverage_decimal"], "0.0300");
  EXPECT_THROW(parse_reports_json("{}"), Error);
  EXPECT_THROW(parse_reports_json("not json"), Error);
}

TEST(Render, TsvHasOneRowPerPair) {
  std::vector<CoverageReport> reports{sample_report(), sample_report()};
  reports[1].text_id = "other";
  auto tsv = render(reports, ReportFormat::kTsv);
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 1 + 8);
  EXPECT_NE(tsv.find("toy\tpets\tREFERENCE\t2\t0.0300\t3/100\t"), std::string::npos) << tsv;
}

TEST(Render, EmptyReportIsValidInEveryFormat) {
  std::vector<CoverageReport> none;
  EXPECT_TRUE(parse_reports_json(render(none, ReportFormat::kJson)).empty());
  auto tsv = render(none, ReportFormat::kTsv);
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 1);
  EXPECT_FALSE(render(none, ReportFormat::kMarkdown).empty());
  CoverageReport empty_rows;
  empty_rows.text_id = "t";
  EXPECT_EQ(parse_reports_json(render(empty_rows, ReportFormat::kJson))[0], empty_rows);
}

TEST(Render, MarkdownTable) {
  auto md = render(sample_report(), ReportFormat::kMarkdown);
  EXPECT_NE(md.find("| pets | REFERENCE | 2 | 3.00% |"), std::string::npos) << md;
  EXPECT_NE(md.find("config mismatch"), std::string::npos);
}

TEST(ReportFormat, Parse) {
  EXPECT_EQ(parse_report_format("json"), ReportFormat::kJson);
  EXPECT_EQ(parse_report_format("md"), ReportFormat::kMarkdown);
  EXPECT_THROW(parse_report_format("xml"), Error);
}
