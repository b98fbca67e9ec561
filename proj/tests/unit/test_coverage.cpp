#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "../oracle/naive.h"
#include "lexicov/error.h"
#include "lexicov/frequency.h"
#include "lexicov/io.h"
#include "lexicov/pipeline.h"
#include "test_support.h"

using namespace lexicov;
using testing_support::resources;

namespace {

FrequencyTable table_of(std::initializer_list<std::pair<const char*, std::uint64_t>> counts) {
  WordCounts c;
  for (auto [w, n] : counts) c[w] = n;
  return FrequencyTable(c);
}

std::vector<std::string> headwords_of(const RankedList& r) {
  std::vector<std::string> out;
  for (const auto& e : r.entries) out.push_back(e.headword);
  return out;
}

PipelineConfig surface_config() {
  PipelineConfig c;
  c.lemmatize = false;
  return c;
}

}  // namespace

TEST(CountFrequencies, DirectCount) {
  auto t = count_frequencies(std::vector<std::string>{"cat", "dog", "cat"});
  EXPECT_EQ(t.count("cat"), 2u);
  EXPECT_EQ(t.count("dog"), 1u);
  EXPECT_EQ(t.total(), 3u);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_THROW(count_frequencies(std::vector<std::string>{}), Error);
}

TEST(CountFrequencies, ParallelMatchesSerial) {
  std::mt19937_64 rng(5);
  auto vocab = testing_support::random_vocabulary(rng, 300);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::vector<std::string> words;
  for (int i = 0; i < 1000; ++i) words.push_back(vocab[pick(rng)]);
  auto serial = count_frequencies(words);
  for (int jobs : {2, 3, 8}) EXPECT_EQ(count_frequencies(words, {}, jobs), serial);
  for (const auto& w : naive::distinct(words)) EXPECT_EQ(serial.count(w), naive::scan_count(words, w));
}

TEST(FrequencyTable, RejectsZeroCounts) {
  EXPECT_THROW(FrequencyTable(WordCounts{{"a", 0}}), Error);
  EXPECT_THROW(FrequencyTable(WordCounts{}), Error);
}

TEST(CoverageOf, WorkedExample) {
  auto t = table_of({{"dog", 20}, {"cat", 10}, {"other", 970}});
  EXPECT_EQ(coverage_of("dog", t), Fraction(2, 100));
  EXPECT_EQ(coverage_of("cat", t), Fraction(1, 100));
  EXPECT_EQ(coverage_of("dog", t) + coverage_of("cat", t), Fraction(3, 100));
  EXPECT_EQ(coverage_of("absent", t), Fraction(0, 1));
  WordList both(ListKind::kReference, {"dog", "cat"});
  EXPECT_EQ(list_coverage(both, t), Fraction(3, 100));
}

TEST(Rank, CumulativeCoverage) {
  auto r = rank(table_of({{"a", 5}, {"b", 3}, {"c", 1}, {"d", 1}}));
  ASSERT_EQ(r.size(), 4u);
  std::vector<Fraction> cum;
  for (const auto& e : r.entries) cum.push_back(e.cum_coverage);
  EXPECT_EQ(cum, (std::vector<Fraction>{{5, 10}, {8, 10}, {9, 10}, {1, 1}}));
  EXPECT_EQ(r[2].headword, "c");
  EXPECT_EQ(r[3].rank, 4u);
}

TEST(Rank, SingleAndTies) {
  auto one = rank(table_of({{"x", 7}}));
  EXPECT_EQ(one[0].rank, 1u);
  EXPECT_EQ(one[0].coverage, Fraction(1, 1));
  EXPECT_EQ(headwords_of(rank(table_of({{"b", 2}, {"a", 2}}))), (std::vector<std::string>{"a", "b"}));
}

TEST(Cutoff, Examples) {
  auto r = rank(table_of({{"a", 5}, {"b", 3}, {"c", 1}, {"d", 1}}));
  auto c = cutoff(r, Fraction(8, 10));
  EXPECT_EQ(c.p, 2u);
  EXPECT_EQ(c.achieved, Fraction(8, 10));
  EXPECT_EQ(cutoff(r, Fraction(1, 1)).p, 4u);
  EXPECT_EQ(cutoff(r, Fraction::parse("0.0001")).p, 1u);
  EXPECT_EQ(cutoff(r, Fraction(81, 100)).p, 3u);
  EXPECT_THROW(cutoff(r, Fraction(0, 1)), Error);
  EXPECT_THROW(cutoff(r, Fraction(11, 10)), Error);
  EXPECT_THROW(cutoff(RankedList{}, Fraction(1, 2)), Error);
}

TEST(Cutoff, TiesDoNotExtendTheList) {
  auto r = rank(table_of({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}}));
  EXPECT_EQ(cutoff(r, Fraction(1, 2)).p, 2u);
}

TEST(Cutoff, MonotoneInThreshold) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> cnt(1, 50);
  WordCounts wc;
  auto vocab = testing_support::random_vocabulary(rng, 200);
  for (const auto& w : vocab) wc[w] = cnt(rng);
  auto r = rank(FrequencyTable(wc));
  std::size_t prev = 0;
  for (int t = 1; t <= 100; ++t) {
    std::size_t p = cutoff(r, Fraction(t, 100)).p;
    EXPECT_GE(p, prev);
    prev = p;
  }
}

TEST(RankedList, Invariants) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> cnt(1, 1000);
  WordCounts wc;
  for (const auto& w : testing_support::random_vocabulary(rng, 400)) wc[w] = cnt(rng);
  auto r = rank(FrequencyTable(wc));
  Fraction sum;
  for (std::size_t i = 0; i < r.size(); ++i) {
    sum += r[i].coverage;
    EXPECT_EQ(r[i].cum_coverage, sum);
    if (i > 0) {
      EXPECT_GE(r[i - 1].count, r[i].count);
      EXPECT_GE(r[i - 1].coverage, r[i].coverage);
      if (r[i - 1].count == r[i].count) EXPECT_LT(r[i - 1].headword, r[i].headword);
    }
  }
  EXPECT_EQ(sum, Fraction(1, 1));
}

TEST(WordList, ExcludeKnown) {
  WordList l(ListKind::kSwl, {"a", "b", "c"});
  WordList known(ListKind::kReference, {"b"});
  EXPECT_EQ(exclude_known(l, known).headwords(), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(exclude_known(l, WordList(ListKind::kReference, {})).headwords(), l.headwords());
  EXPECT_TRUE(exclude_known(l, l).empty());
  EXPECT_EQ(exclude_known(l, known).provenance_value("excluded_known"), "1");
}

TEST(WordList, RejectsDuplicatesAndUnnormalized) {
  EXPECT_THROW(WordList(ListKind::kSwl, {"a", "a"}), Error);
  EXPECT_THROW(WordList(ListKind::kSwl, {"Dog"}), Error);
  EXPECT_THROW(WordList(ListKind::kSwl, {""}), Error);
  EXPECT_THROW(WordList(ListKind::kSwl, {"a b"}), Error);
}

TEST(WordList, FileRoundTrip) {
  testing_support::TempDir dir;
  Provenance p{{"source", "alice.txt"}, {"threshold", "19/20"}, {"extra_letters", ""}};
  WordList l(ListKind::kSwl, {"the", "and", "café"}, p);
  write_wordlist(dir / "l.txt", l);
  EXPECT_EQ(read_wordlist(dir / "l.txt"), l);
  EXPECT_EQ(parse_wordlist(format_wordlist(l)), l);
}

TEST(WordList, ParsesPlainReferenceFiles) {
  auto l = parse_wordlist("# NGSL sample\nThe\nbe\n\nthe\nx1\n  of \n");
  EXPECT_EQ(l.kind(), ListKind::kReference);
  EXPECT_EQ(l.headwords(), (std::vector<std::string>{"the", "be", "of"}));
  EXPECT_EQ(l.provenance_value("duplicates_dropped"), "1");
  EXPECT_EQ(l.provenance_value("skipped_entries"), "1");
}

TEST(PipelineConfig, DefaultsAndValidation) {
  PipelineConfig c;
  EXPECT_EQ(c.threshold, Fraction(95, 100));
  EXPECT_TRUE(c.lemmatize);
  EXPECT_FALSE(c.remove_stopwords);
  EXPECT_TRUE(c.keep_proper_nouns);
  EXPECT_FALSE(c.max_size);
  EXPECT_EQ(c.lemma_order, LemmaOrder::kBeforeCount);
  EXPECT_NO_THROW(c.validate());
  c.threshold = Fraction(3, 2);
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.max_size = 0;
  EXPECT_THROW(c.validate(), Error);
}

TEST(BuildSwl, SelfCoverageAndProvenance) {
  RawText text = make_text(
      "The cat sat on the mat. The dog sat on the log. A cat and a dog ran. "
      "Cats chase dogs and dogs chase cats.",
      "toy");
  for (auto t : {Fraction(5, 10), Fraction(8, 10), Fraction(95, 100), Fraction(1, 1)}) {
    PipelineConfig c;
    c.threshold = t;
    auto b = build_swl_detailed(text, c, resources());
    EXPECT_GE(list_coverage(b.list, b.table), t);
    EXPECT_EQ(list_coverage(b.list, b.table), b.achieved);
    EXPECT_EQ(b.list.kind(), ListKind::kSwl);
    EXPECT_EQ(b.list.provenance_value("threshold"), t.to_string());
    EXPECT_EQ(b.list.provenance_value("source"), "toy");
  }
}

TEST(BuildSwl, MaxSizeTruncatesAndRecordsShortfall) {
  RawText text = make_text("a a a a b b b c c d e f g h", "t");
  PipelineConfig c = surface_config();
  c.max_size = 2;
  auto b = build_swl_detailed(text, c, resources());
  EXPECT_EQ(b.list.headwords(), (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(b.threshold_reached);
  EXPECT_EQ(b.list.provenance_value("threshold_unreachable"), "true");
  EXPECT_EQ(b.achieved, Fraction(7, 14));
}

TEST(BuildSwl, ExcludeList) {
  RawText text = make_text("a a a a b b b c c d", "t");
  PipelineConfig c = surface_config();
  c.threshold = Fraction(9, 10);
  c.exclude_list = WordList(ListKind::kReference, {"a"});
  auto l = build_swl(text, c, resources());
  EXPECT_EQ(l.headwords(), (std::vector<std::string>{"b", "c"}));
}

TEST(BuildSwl, EmptyInput) {
  EXPECT_THROW(build_swl(make_text("123 456 -- !!", "t"), PipelineConfig{}, resources()), Error);
  try {
    build_swl(make_text("", "t"), PipelineConfig{}, resources());
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(BuildSwl, LemmaOrderVariants) {
  std::string s;
  for (int i = 0; i < 30; ++i) s += "the cat runs. ";
  for (int i = 0; i < 10; ++i) s += "the cat ran. ";
  for (int i = 0; i < 5; ++i) s += "running dogs. ";
  RawText text = make_text(s, "t");
  PipelineConfig before;
  before.threshold = Fraction(1, 1);
  auto b = build_swl(text, before, resources());
  PipelineConfig after = before;
  after.lemma_order = LemmaOrder::kAfterCutoff;
  auto a = build_swl(text, after, resources());
  EXPECT_TRUE(b.contains("run"));
  EXPECT_FALSE(b.contains("runs"));
  EXPECT_TRUE(a.contains("run"));
  EXPECT_EQ(std::set<std::string>(a.headwords().begin(), a.headwords().end()),
            std::set<std::string>(b.headwords().begin(), b.headwords().end()));
  EXPECT_EQ(a.provenance_value("lemma_order"), "after_cutoff");
}

TEST(BuildSwl, ProperNounsStayUnlemmatized) {
  std::string s;
  for (int i = 0; i < 10; ++i) s += "then Rose smiled and the sun rose. ";
  RawText text = make_text(s, "t");
  PipelineConfig keep;
  keep.threshold = Fraction(1, 1);
  // "rose" is capitalized in half its uses: not proper, lemmatized to "rise".
  EXPECT_TRUE(build_swl(text, keep, resources()).contains("rise"));

  std::string named;
  for (int i = 0; i < 10; ++i) named += "then Rose smiled at the sun. ";
  auto k = build_swl(make_text(named, "t"), keep, resources());
  EXPECT_TRUE(k.contains("rose"));
  EXPECT_FALSE(k.contains("rise"));
  PipelineConfig drop = keep;
  drop.keep_proper_nouns = false;
  auto d = build_swl(make_text(named, "t"), drop, resources());
  EXPECT_FALSE(d.contains("rose"));
  EXPECT_FALSE(d.contains("rise"));
}

TEST(BuildSwl, StopwordDenominator) {
  RawText text = make_text("the cat and the dog and the bird", "t");
  PipelineConfig c = surface_config();
  c.remove_stopwords = true;
  auto t = build_table(text, c, resources());
  EXPECT_EQ(t.total(), 3u);
  EXPECT_EQ(provenance_value(t.provenance(), "denominator"), "stopwords_excluded");
  EXPECT_EQ(provenance_value(build_table(text, surface_config(), resources()).provenance(),
                             "denominator"),
            "all_tokens");
}

TEST(BuildSwl, ShuffleInvariance) {
  std::mt19937_64 rng(21);
  auto vocab = testing_support::random_vocabulary(rng, 80);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::vector<std::string> words;
  for (int i = 0; i < 2000; ++i) words.push_back(vocab[pick(rng) % (1 + pick(rng))]);
  auto join = [](const std::vector<std::string>& w) {
    std::string s;
    for (const auto& x : w) s += x + " ";
    return s;
  };
  PipelineConfig c = surface_config();
  auto base = build_swl_detailed(make_text(join(words), "t"), c, resources());
  for (int k = 0; k < 5; ++k) {
    std::shuffle(words.begin(), words.end(), rng);
    auto other = build_swl_detailed(make_text(join(words), "t"), c, resources());
    EXPECT_EQ(other.table, base.table);
    EXPECT_EQ(other.list.headwords(), base.list.headwords());
  }
}

TEST(ListCoverage, ConfigMismatch) {
  auto t = build_table(make_text("cats and dogs", "t"), PipelineConfig{}, resources());
  WordList surface(ListKind::kSwl, {"cats"}, {{"lemmatize", "false"}});
  EXPECT_THROW(list_coverage(surface, t), Error);
  WordList plain(ListKind::kReference, {"cat"});
  EXPECT_EQ(list_coverage(plain, t), Fraction(1, 3));
  WordList all(ListKind::kReference, {"cat", "and", "dog"});
  EXPECT_EQ(list_coverage(all, t), Fraction(1, 1));
}

TEST(ListCoverage, MonotoneUnderAddition) {
  auto t = build_table(make_text("a b c a b a d e f a", "t"), surface_config(), resources());
  std::vector<std::string> words;
  Fraction prev;
  for (const char* w : {"z", "a", "q", "b", "c", "f"}) {
    words.push_back(w);
    Fraction c = list_coverage(WordList(ListKind::kReference, words), t);
    EXPECT_GE(c, prev);
    prev = c;
  }
}

// Random documents against the token-scan oracle, including noise tokens the
// tokenizer and cleaner must drop.
TEST(OracleEquivalence, RandomDocuments) {
  std::mt19937_64 rng(20240611);
  const std::vector<std::string> noise{"1984", "don't", "x-ray", "a1", "#", "--", "3.14", "it's"};
  const std::vector<std::string> seps{" ", "  ", ", ", ". ", "\n", "; ", " (", ") ", "! "};
  PipelineConfig c = surface_config();
  for (int doc = 0; doc < 100; ++doc) {
    std::uniform_int_distribution<std::size_t> vsize(1, 500), nsize(1, 10000);
    auto vocab = testing_support::random_vocabulary(rng, vsize(rng));
    std::size_t n = nsize(rng);
    double skew = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    std::vector<double> weights;
    for (std::size_t i = 0; i < vocab.size(); ++i) weights.push_back(1.0 / std::pow(i + 1.0, skew));
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    std::uniform_int_distribution<std::size_t> sep(0, seps.size() - 1), nz(0, noise.size() - 1);
    std::bernoulli_distribution is_noise(0.05);

    std::string text;
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < n; ++i) {
      if (is_noise(rng)) text += noise[nz(rng)];
      else {
        tokens.push_back(vocab[pick(rng)]);
        text += tokens.back();
      }
      text += seps[sep(rng)];
    }
    if (tokens.empty()) continue;

    auto table = build_table(make_text(text, "doc"), c, resources());
    auto expected = naive::ranked(tokens);
    ASSERT_EQ(table.total(), tokens.size()) << "doc " << doc;
    ASSERT_EQ(table.size(), expected.size());
    auto r = rank(table);
    std::uint64_t cum = 0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      ASSERT_EQ(r[i].headword, expected[i].word);
      ASSERT_EQ(r[i].count, expected[i].count);
      cum += expected[i].count;
      ASSERT_EQ(r[i].coverage, Fraction(expected[i].count, tokens.size()));
      ASSERT_EQ(r[i].cum_coverage, Fraction(cum, tokens.size()));
    }

    std::uniform_int_distribution<std::uint64_t> thr(1, 1000);
    for (int k = 0; k < 5; ++k) {
      std::uint64_t num = thr(rng);
      ASSERT_EQ(cutoff(r, Fraction(num, 1000)).p,
                naive::cutoff_rank(expected, tokens.size(), num, 1000));
    }

    std::vector<std::string> list;
    std::bernoulli_distribution take(0.3);
    for (const auto& w : vocab)
      if (take(rng) && list.size() < 50) list.push_back(w);
    list.push_back("zzzzzzzzzzzz");
    ASSERT_EQ(list_coverage(WordList(ListKind::kReference, list), table),
              Fraction(naive::covered(tokens, list), tokens.size()));
  }
}

TEST(Io, AtomicWriteAndHash) {
  testing_support::TempDir dir;
  write_file_atomic(dir / "f.txt", "hello");
  EXPECT_EQ(read_file(dir / "f.txt"), "hello");
  write_file_atomic(dir / "f.txt", "bye");
  EXPECT_EQ(read_file(dir / "f.txt"), "bye");
  EXPECT_THROW(read_file(dir / "missing"), Error);
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_NE(fnv1a_hex("a"), fnv1a_hex("b"));
}
