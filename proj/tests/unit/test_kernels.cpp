#include <gtest/gtest.h>

#include <random>

#include "lexicov/kernels.h"
#include "test_support.h"

using namespace lexicov;

namespace {

std::vector<std::string> random_words(std::uint64_t seed, std::size_t n, std::size_t vocab) {
  std::mt19937_64 rng(seed);
  auto v = testing_support::random_vocabulary(rng, vocab);
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(v[pick(rng)]);
  return out;
}

}  // namespace

TEST(Kernels, ParallelCountEqualsSerial) {
  for (std::size_t n : {0u, 1u, 7u, 1000u, 50000u}) {
    auto words = random_words(n + 1, n, 200);
    auto serial = kernels::count_serial(words);
    for (int jobs : {1, 2, 4, 8, 16}) EXPECT_EQ(kernels::count_parallel(words, jobs), serial) << n;
  }
}

TEST(Kernels, MergeAllIsOrderIndependent) {
  std::vector<WordCounts> parts;
  for (int i = 0; i < 9; ++i) parts.push_back(kernels::count_serial(random_words(i, 500, 50)));
  WordCounts expected;
  for (const auto& p : parts) kernels::merge_into(expected, p);
  for (int jobs : {1, 2, 3, 8}) {
    auto copy = parts;
    EXPECT_EQ(kernels::merge_all(copy, jobs), expected);
    std::reverse(copy.begin(), copy.end());
    auto rev = parts;
    std::reverse(rev.begin(), rev.end());
    EXPECT_EQ(kernels::merge_all(rev, jobs), expected);
  }
  std::vector<WordCounts> none;
  EXPECT_TRUE(kernels::merge_all(none, 4).empty());
}

TEST(Kernels, DefaultJobsPositive) { EXPECT_GE(kernels::default_jobs(), 1); }
