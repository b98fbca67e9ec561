#include <cstdlib>

#include "lexicov/error.h"
#include "lexicov/pipeline.h"

namespace lexicov {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("LEXICOV_DATA_DIR"); env && *env) return env;
  return LEXICOV_DATA_DIR_DEFAULT;
}

std::filesystem::path default_lemma_dict_path() { return data_dir() / "lemmas_en.tsv"; }
std::filesystem::path default_stopwords_path() { return data_dir() / "stopwords_en.txt"; }

Resources Resources::load(const std::filesystem::path& lemma_dict,
                          const std::filesystem::path& stopwords) {
  return Resources{LemmaDictionary::load(lemma_dict), StopwordSet::load(stopwords)};
}

Resources load_default_resources() {
  return Resources::load(default_lemma_dict_path(), default_stopwords_path());
}

}  // namespace lexicov
