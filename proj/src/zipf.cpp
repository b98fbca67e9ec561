#include "lexicov/zipf.h"

#include <algorithm>
#include <cmath>

#include "lexicov/error.h"

namespace lexicov {

RankRange default_rank_range(const RankedList& ranked) {
  std::size_t hi = 0;
  for (const auto& e : ranked.entries) {
    if (e.count < 3) break;
    hi = e.rank;
  }
  return RankRange{10, hi};
}

ZipfFit fit_zipf(const RankedList& ranked, RankRange range) {
  if (range.lo < 1 || range.hi > ranked.size() || range.hi < range.lo || range.hi - range.lo + 1 < 3)
    throw Error(ErrorCode::kRangeTooSmall,
                "zipf fit needs at least 3 ranks inside the list, got [" + std::to_string(range.lo) +
                    ", " + std::to_string(range.hi) + "] of " + std::to_string(ranked.size()));

  const std::size_t n = range.hi - range.lo + 1;
  std::vector<double> x(n), y(n);
  double mx = 0, my = 0;
  bool flat = true;
  for (std::size_t i = 0; i < n; ++i) {
    const RankedEntry& e = ranked[range.lo - 1 + i];
    x[i] = std::log(static_cast<double>(e.rank));
    y[i] = std::log(static_cast<double>(e.count));
    flat &= e.count == ranked[range.lo - 1].count;
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  ZipfFit fit;
  fit.range = range;
  fit.points = n;
  if (flat) {
    fit.degenerate = true;
    fit.log_intercept = std::log(static_cast<double>(ranked[range.lo - 1].count));
    return fit;
  }

  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  double slope = sxy / sxx;
  fit.exponent = -slope;
  fit.log_intercept = my - slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = y[i] - (fit.log_intercept + slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

std::vector<Fraction> marginal_gains(const RankedList& ranked) {
  std::vector<Fraction> gains;
  gains.reserve(ranked.size());
  for (const auto& e : ranked.entries) gains.push_back(e.coverage);
  return gains;
}

KneeDiagnostic knee_point(const std::vector<Fraction>& gains, double sensitivity) {
  KneeDiagnostic out;
  out.gain_curve = gains;
  const std::size_t n = gains.size();
  if (n < 3) return out;

  std::vector<double> xs(n), ys(n);
  double cum = 0;
  const double log_n = std::log(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    cum += gains[k].to_double();
    xs[k] = std::log(static_cast<double>(k + 1)) / log_n;
    ys[k] = cum;
  }
  const double dx = xs[n - 1] - xs[0];
  const double dy = ys[n - 1] - ys[0];
  const double len = std::hypot(dx, dy);

  double best = 0.0;
  std::size_t best_k = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // Positive when the point lies above the chord.
    double d = (dx * (ys[k] - ys[0]) - dy * (xs[k] - xs[0])) / len;
    if (d > best) {
      best = d;
      best_k = k;
    }
  }
  out.max_distance = best;
  if (best > sensitivity) {
    out.verdict = KneeVerdict::kFound;
    out.knee_rank = best_k + 1;
  }
  return out;
}

std::vector<ZipfPoint> zipf_points(const RankedList& ranked) {
  std::vector<ZipfPoint> pts;
  pts.reserve(ranked.size());
  for (const auto& e : ranked.entries)
    pts.push_back({std::log(static_cast<double>(e.rank)), std::log(static_cast<double>(e.count))});
  return pts;
}

}  // namespace lexicov
