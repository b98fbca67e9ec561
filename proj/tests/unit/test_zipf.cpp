#include <gtest/gtest.h>

#include <cmath>

#include "lexicov/error.h"
#include "lexicov/zipf.h"

using namespace lexicov;

namespace {

RankedList from_counts(const std::vector<std::uint64_t>& counts) {
  WordCounts wc;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    // Fixed-width base-26 names sort in index order, so ties keep it.
    std::string w;
    for (std::size_t d = 0, v = i; d < 4; ++d, v /= 26) w.insert(w.begin(), static_cast<char>('a' + v % 26));
    wc[w] = counts[i];
  }
  return rank(FrequencyTable(wc));
}

std::vector<std::uint64_t> exact_zipf(double c, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::size_t r = 1; r <= n; ++r) out.push_back(static_cast<std::uint64_t>(std::floor(c / r)));
  return out;
}

std::vector<Fraction> gains_of(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
  std::vector<Fraction> out;
  for (auto c : counts) out.emplace_back(c, total);
  return out;
}

}  // namespace

// Reference values from an independent least-squares fit of the same points.
TEST(FitZipf, ExactZipfTenThousand) {
  auto r = from_counts(exact_zipf(10000, 100));
  auto fit = fit_zipf(r, {1, 100});
  EXPECT_NEAR(fit.exponent, 1.001274446056358, 1e-9);
  EXPECT_NEAR(fit.log_intercept, 9.212781191886796, 1e-9);
  EXPECT_NEAR(fit.r_squared, 0.9999959055230134, 1e-12);
  EXPECT_NEAR(fit.exponent, 1.0, 0.02);
  EXPECT_GE(fit.r_squared, 0.999);
  EXPECT_EQ(fit.points, 100u);
  EXPECT_FALSE(fit.degenerate);
}

TEST(FitZipf, ExactZipfMillion) {
  auto fit = fit_zipf(from_counts(exact_zipf(1e6, 1000)), {1, 1000});
  EXPECT_NEAR(fit.exponent, 1.0001178227449175, 1e-9);
  EXPECT_NEAR(fit.log_intercept, 13.815976809780702, 1e-9);
  EXPECT_NEAR(fit.r_squared, 0.9999999668123426, 1e-12);
}

TEST(FitZipf, ScaleInvariance) {
  auto base = exact_zipf(10000, 100);
  auto doubled = base;
  for (auto& c : doubled) c *= 2;
  auto a = fit_zipf(from_counts(base), {1, 100});
  auto b = fit_zipf(from_counts(doubled), {1, 100});
  EXPECT_NEAR(a.exponent, b.exponent, 1e-12);
  EXPECT_NEAR(a.r_squared, b.r_squared, 1e-12);
  EXPECT_NEAR(b.log_intercept, 9.905928372446738, 1e-9);
  for (std::uint64_t k : {3u, 17u, 1000u}) {
    auto scaled = base;
    for (auto& c : scaled) c *= k;
    auto s = fit_zipf(from_counts(scaled), {1, 100});
    EXPECT_NEAR(s.exponent, a.exponent, 1e-12);
    EXPECT_NEAR(s.r_squared, a.r_squared, 1e-12);
  }
}

TEST(FitZipf, DegenerateAndTooSmall) {
  auto flat = from_counts({5, 5, 5});
  auto fit = fit_zipf(flat, {1, 3});
  EXPECT_TRUE(fit.degenerate);
  EXPECT_EQ(fit.exponent, 0.0);
  EXPECT_EQ(fit.r_squared, 0.0);
  EXPECT_THROW(fit_zipf(flat, {1, 2}), Error);
  EXPECT_THROW(fit_zipf(flat, {2, 5}), Error);
  EXPECT_THROW(fit_zipf(flat, {0, 3}), Error);
}

TEST(FitZipf, DefaultRange) {
  auto r = from_counts(exact_zipf(100, 60));
  auto range = default_rank_range(r);
  EXPECT_EQ(range.lo, 10u);
  EXPECT_EQ(range.hi, 33u);  // floor(100/33) = 3, floor(100/34) = 2
}

TEST(MarginalGains, Examples) {
  auto r = from_counts({5, 3, 1, 1});
  EXPECT_EQ(marginal_gains(r), (std::vector<Fraction>{{1, 2}, {3, 10}, {1, 10}, {1, 10}}));
  EXPECT_EQ(marginal_gains(from_counts({9})), (std::vector<Fraction>{{1, 1}}));
  Fraction sum;
  for (const auto& g : marginal_gains(from_counts(exact_zipf(5000, 300)))) sum += g;
  EXPECT_EQ(sum, Fraction(1, 1));
}

TEST(KneePoint, TwoRegimeCurveIsFound) {
  std::vector<std::uint64_t> counts(4, 100);
  counts.insert(counts.end(), 100, 1);
  auto k = knee_point(gains_of(counts, 500));
  EXPECT_EQ(k.verdict, KneeVerdict::kFound);
  ASSERT_TRUE(k.knee_rank);
  EXPECT_EQ(*k.knee_rank, 4u);
  EXPECT_NEAR(k.max_distance, 0.28205738961341587, 1e-12);
  EXPECT_EQ(k.gain_curve.size(), 104u);
}

TEST(KneePoint, LinearCurveHasNoKnee) {
  auto k = knee_point(gains_of(std::vector<std::uint64_t>(50, 1), 50));
  EXPECT_EQ(k.verdict, KneeVerdict::kNoMeaningfulKnee);
  EXPECT_FALSE(k.knee_rank);
  EXPECT_NEAR(k.max_distance, 0.0, 1e-12);
}

TEST(KneePoint, ZipfCurvesHaveNoKneeAtDefaultSensitivity) {
  for (double s : {0.8, 1.0, 1.2, 1.5}) {
    for (std::size_t n : {100u, 1000u, 10000u}) {
      std::vector<std::uint64_t> counts;
      std::uint64_t total = 0;
      for (std::size_t r = 1; r <= n; ++r) {
        counts.push_back(static_cast<std::uint64_t>(std::llround(1e7 / std::pow(r, s))));
        total += counts.back();
      }
      auto k = knee_point(gains_of(counts, total));
      EXPECT_EQ(k.verdict, KneeVerdict::kNoMeaningfulKnee) << "s=" << s << " n=" << n;
      auto again = knee_point(gains_of(counts, total));
      EXPECT_EQ(again.max_distance, k.max_distance);
    }
  }
}

TEST(KneePoint, ShortCurves) {
  EXPECT_EQ(knee_point({}).verdict, KneeVerdict::kNoMeaningfulKnee);
  EXPECT_EQ(knee_point({Fraction(1, 1)}).verdict, KneeVerdict::kNoMeaningfulKnee);
}

TEST(ZipfPoints, Examples) {
  auto one = zipf_points(from_counts({1}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].log_rank, 0.0);
  EXPECT_EQ(one[0].log_count, 0.0);
  auto r = from_counts(exact_zipf(1000, 50));
  auto pts = zipf_points(r);
  ASSERT_EQ(pts.size(), r.size());
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LE(pts[i].log_count, pts[i - 1].log_count);
  EXPECT_NEAR(pts[1].log_rank, std::log(2.0), 1e-15);
}
