#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kout/error.hpp"

namespace kout {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for a binomial proportion.
inline Interval wilson_interval(std::size_t successes, std::size_t trials, double z = kZ95) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, std::min(center - half, p)), std::min(1.0, std::max(center + half, p))};
}

/// sqrt(p (1 - p) / n)
inline double binomial_sigma(double p, std::size_t trials) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

struct TrendPoint {
  double parameter = 0.0;
  std::size_t successes = 0;
  std::size_t trials = 0;

  double frequency() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
  Interval interval() const { return wilson_interval(successes, trials); }
};

struct TrendReport {
  std::vector<TrendPoint> points;
  bool non_decreasing = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // (i, j), i < j

  std::string verdict() const { return non_decreasing ? "non-decreasing" : "violated"; }

  std::string table() const {
    std::string out = "parameter  successes/trials  frequency  wilson95\n";
    char line[160];
    for (const auto& p : points) {
      const auto ci = p.interval();
      std::snprintf(line, sizeof line, "%9g  %7zu/%-7zu  %9.4f  [%.4f, %.4f]\n", p.parameter, p.successes,
                    p.trials, p.frequency(), ci.lo, ci.hi);
      out += line;
    }
    out += "verdict: " + verdict();
    if (violation) {
      std::snprintf(line, sizeof line, " (points %g and %g)", points[violation->first].parameter,
                    points[violation->second].parameter);
      out += line;
    }
    return out;
  }
};

/*
 * Success frequencies along increasing parameter values. A drop counts as a
 * violation only when it clears both Wilson intervals: some i < j with
 * upper(j) < lower(i).
 */
inline TrendReport trend_report(std::vector<TrendPoint> points) {
  if (points.size() < 2) throw Error(ErrorCode::ConfigError, "trend needs at least 2 points");
  for (const auto& p : points) {
    if (p.trials != points.front().trials || p.trials == 0) {
      throw Error(ErrorCode::ConfigError, "trend points need a common nonzero trial count");
    }
  }
  TrendReport report;
  report.points = std::move(points);
  for (std::size_t i = 0; i < report.points.size() && report.non_decreasing; ++i) {
    for (std::size_t j = i + 1; j < report.points.size(); ++j) {
      if (report.points[j].interval().hi < report.points[i].interval().lo) {
        report.non_decreasing = false;
        report.violation = std::make_pair(i, j);
        break;
      }
    }
  }
  return report;
}

}  // namespace kout
