#include "lexicov/pipeline.h"

#include <unordered_map>
#include <unordered_set>

#include "lexicov/error.h"
#include "lexicov/io.h"

namespace lexicov {

namespace {

constexpr std::string_view kDenominatorAll = "all_tokens";
constexpr std::string_view kDenominatorNoStop = "stopwords_excluded";

std::vector<std::string> texts_of(const std::vector<Headword>& hw) {
  std::vector<std::string> out;
  out.reserve(hw.size());
  for (const auto& h : hw) out.push_back(h.text);
  return out;
}

// Lemmatizes non-proper headwords in place.
void lemmatize_headwords(std::vector<Headword>& hw, const LemmaDictionary& dict) {
  std::unordered_map<std::string, std::string> cache;
  for (auto& h : hw) {
    if (h.proper) continue;
    auto [it, inserted] = cache.try_emplace(h.text);
    if (inserted) it->second = lemmatize(h.text, dict);
    h.text = it->second;
  }
}

}  // namespace

Provenance table_provenance(const PipelineConfig& config, const Resources& res) {
  Provenance p = config.snapshot();
  p.emplace_back("lemma_dict", config.lemmatize ? res.lemmas.version() : "none");
  p.emplace_back("stopwords", config.remove_stopwords ? res.stopwords.version() : "none");
  p.emplace_back("denominator",
                 std::string(config.remove_stopwords ? kDenominatorNoStop : kDenominatorAll));
  return p;
}

std::vector<Headword> prepare_headwords(const RawText& text, const PipelineConfig& config,
                                        const Resources& res, bool lemmatize) {
  std::vector<Token> tokens = clean_tokens(tokenize(text), config);
  ProperNounVerdicts verdicts =
      detect_proper_nouns(tokens, config.proper_threshold, config.proper_min_count);

  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (auto& t : tokens) words.push_back(std::move(*t.normalized));
  if (config.remove_stopwords) words = remove_stopwords(words, res.stopwords);

  PipelineConfig policy = config;
  policy.lemmatize = lemmatize;
  policy.lemma_order = LemmaOrder::kBeforeCount;
  return apply_proper_noun_policy(words, verdicts, policy, res.lemmas);
}

FrequencyTable build_table(const RawText& text, const PipelineConfig& config,
                           const Resources& res, int jobs) {
  config.validate();
  auto hw = prepare_headwords(text, config, res, config.lemmatize);
  if (hw.empty())
    throw Error(ErrorCode::kEmptyInput, "'" + text.source_id + "' has no countable tokens");
  Provenance p = table_provenance(config, res);
  p.insert(p.begin(), {"source", text.source_id});
  return count_frequencies(texts_of(hw), std::move(p), jobs);
}

SwlBuild build_swl_detailed(const RawText& text, const PipelineConfig& config,
                            const Resources& res, int jobs) {
  config.validate();
  std::vector<Headword> surface = prepare_headwords(text, config, res, false);
  if (surface.empty())
    throw Error(ErrorCode::kEmptyInput, "'" + text.source_id + "' has no countable tokens");

  std::vector<Headword> headwords = surface;
  if (config.lemmatize) lemmatize_headwords(headwords, res.lemmas);

  Provenance table_prov = table_provenance(config, res);
  table_prov.insert(table_prov.begin(), {"source", text.source_id});
  FrequencyTable table = count_frequencies(texts_of(headwords), table_prov, jobs);

  const bool after = config.lemmatize && config.lemma_order == LemmaOrder::kAfterCutoff;
  std::vector<std::string> selected;
  CutoffResult cut;
  if (!after) {
    RankedList ranked = rank(table);
    cut = cutoff(ranked, config.threshold);
    selected.reserve(cut.p);
    for (std::size_t i = 0; i < cut.p; ++i) selected.push_back(ranked[i].headword);
  } else {
    FrequencyTable surface_table = count_frequencies(texts_of(surface), {}, jobs);
    RankedList ranked = rank(surface_table);
    cut = cutoff(ranked, config.threshold);
    std::unordered_set<std::string> proper;
    for (const auto& h : surface)
      if (h.proper) proper.insert(h.text);
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < cut.p; ++i) {
      const std::string& w = ranked[i].headword;
      std::string head = proper.contains(w) ? w : lemmatize(w, res.lemmas);
      if (seen.insert(head).second) selected.push_back(std::move(head));
    }
  }

  std::unordered_set<std::string> distinct_surface;
  for (const auto& h : surface) distinct_surface.insert(h.text);

  const std::size_t untruncated = selected.size();
  if (config.max_size && selected.size() > *config.max_size) selected.resize(*config.max_size);

  Provenance prov;
  prov.emplace_back("source", text.source_id);
  prov.emplace_back("source_hash", fnv1a_hex(text.content));
  for (auto& kv : table_provenance(config, res)) prov.push_back(std::move(kv));
  prov.emplace_back("tokens", std::to_string(table.total()));
  prov.emplace_back("surface_vocabulary", std::to_string(distinct_surface.size()));
  prov.emplace_back("headword_vocabulary", std::to_string(table.size()));
  prov.emplace_back("cutoff_rank", std::to_string(cut.p));
  WordList list(ListKind::kSwl, std::move(selected), std::move(prov));

  Fraction achieved = list_coverage(list, table);
  bool reached = achieved >= config.threshold;
  if (untruncated != list.size()) list.set_provenance("truncated_from", std::to_string(untruncated));
  list.set_provenance("achieved", achieved.to_string());
  list.set_provenance("achieved_decimal", achieved.to_decimal(4));
  if (!reached) list.set_provenance("threshold_unreachable", "true");

  if (config.exclude_list) {
    list = exclude_known(list, *config.exclude_list);
    Fraction after_exclusion = list_coverage(list, table);
    list.set_provenance("achieved_after_exclusion", after_exclusion.to_string());
  }

  const std::size_t headword_vocabulary = table.size();
  return SwlBuild{std::move(list), cut, std::move(table), achieved, reached,
                  distinct_surface.size(), headword_vocabulary};
}

WordList build_swl(const RawText& text, const PipelineConfig& config, const Resources& res) {
  return build_swl_detailed(text, config, res).list;
}

bool compatible(const Provenance& list, const Provenance& table) {
  for (std::string_view key : {"lemmatize", "lemma_dict"}) {
    auto a = provenance_value(list, key);
    auto b = provenance_value(table, key);
    if (a && b && *a != *b) return false;
  }
  return true;
}

Fraction list_coverage(const WordList& list, const FrequencyTable& table) {
  if (!compatible(list.provenance(), table.provenance()))
    throw Error(ErrorCode::kConfigMismatch,
                "word list and frequency table use different lemmatization settings");
  std::uint64_t covered = 0;
  for (const auto& w : list.headwords()) covered += table.count(w);
  return Fraction(covered, table.total());
}

}  // namespace lexicov
