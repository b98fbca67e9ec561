#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lexicov/fraction.h"
#include "lexicov/frequency.h"

namespace lexicov {

/// Inclusive, 1-based.
struct RankRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

struct ZipfFit {
  double exponent = 0.0;  // s in count ~ C / rank^s
  double log_intercept = 0.0;
  double r_squared = 0.0;
  RankRange range;
  std::size_t points = 0;
  /// All counts in range equal: exponent and r_squared are reported as 0.
  bool degenerate = false;
};

/// Ranks 10 .. last rank with count >= 3, clipped to the list. May be empty
/// (hi < lo) for short lists.
RankRange default_rank_range(const RankedList& ranked);

/// Ordinary least squares of ln(count) on ln(rank) over `range`. Throws
/// Error(kRangeTooSmall) when the range holds fewer than 3 entries or falls
/// outside the list.
ZipfFit fit_zipf(const RankedList& ranked, RankRange range);

/// Per-rank coverage (the discrete derivative of cumulative coverage).
std::vector<Fraction> marginal_gains(const RankedList& ranked);

enum class KneeVerdict { kFound, kNoMeaningfulKnee };

struct KneeDiagnostic {
  std::optional<std::size_t> knee_rank;
  std::vector<Fraction> gain_curve;
  KneeVerdict verdict = KneeVerdict::kNoMeaningfulKnee;
  double max_distance = 0.0;
};

/// Below this, natural-language and synthetic Zipf curves (s <= 1.5) do not
/// report a knee.
inline constexpr double kDefaultKneeSensitivity = 0.25;

/// Maximum distance to chord on the cumulative-coverage curve, plotted
/// against ln(rank)/ln(n) so that a pure Zipf curve is close to straight.
/// Only points above the chord count: a diminishing-returns knee bulges
/// upward. FOUND when the largest distance exceeds `sensitivity`.
///
/// Natural text rarely shows such a knee; expect kNoMeaningfulKnee there and
/// pick list sizes by coverage threshold instead.
KneeDiagnostic knee_point(const std::vector<Fraction>& gains,
                          double sensitivity = kDefaultKneeSensitivity);

struct ZipfPoint {
  double log_rank = 0.0;
  double log_count = 0.0;
};

/// Natural-log (rank, count) pairs in rank order.
std::vector<ZipfPoint> zipf_points(const RankedList& ranked);

}  // namespace lexicov
