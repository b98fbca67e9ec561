#include "lexicov/config.h"

#include <fmt/format.h>

#include "lexicov/error.h"

namespace lexicov {

std::string_view to_string(LemmaOrder order) {
  return order == LemmaOrder::kBeforeCount ? "before_count" : "after_cutoff";
}

LemmaOrder parse_lemma_order(std::string_view text) {
  if (text == "before_count" || text == "before") return LemmaOrder::kBeforeCount;
  if (text == "after_cutoff" || text == "after") return LemmaOrder::kAfterCutoff;
  throw Error(ErrorCode::kInvalidArgument, "unknown lemma order '" + std::string(text) + "'");
}

void PipelineConfig::validate() const {
  if (threshold.num() == 0 || threshold > Fraction(1, 1))
    throw Error(ErrorCode::kInvalidArgument,
                "threshold must be in (0, 1], got " + threshold.to_decimal(6));
  if (max_size && *max_size == 0)
    throw Error(ErrorCode::kInvalidArgument, "max_size must be at least 1");
  if (!(proper_threshold >= 0.0 && proper_threshold <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "proper_threshold must be in [0, 1]");
}

Provenance PipelineConfig::snapshot() const {
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  Provenance p;
  p.emplace_back("threshold", threshold.to_string());
  p.emplace_back("lemmatize", flag(lemmatize));
  p.emplace_back("remove_stopwords", flag(remove_stopwords));
  p.emplace_back("keep_proper_nouns", flag(keep_proper_nouns));
  p.emplace_back("max_size", max_size ? std::to_string(*max_size) : "none");
  p.emplace_back("lemma_order", std::string(to_string(lemma_order)));
  p.emplace_back("exclude_list", exclude_list ? std::to_string(exclude_list->size()) : "none");
  p.emplace_back("split_hyphens", flag(split_hyphens));
  p.emplace_back("extra_letters", extra_letters);
  p.emplace_back("proper_threshold", fmt::format("{}", proper_threshold));
  p.emplace_back("proper_min_count", std::to_string(proper_min_count));
  return p;
}

}  // namespace lexicov
