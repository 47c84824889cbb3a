#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "evt/distributions.hpp"
#include "evt/sample.hpp"

namespace evt {

struct DescriptiveStats {
  std::size_t n;
  double range;
  double mean;
  double variance;  // n - 1 denominator
  double stdDev;
  double coefVariationPct;
  double stdError;
  double skewness;        // adjusted Fisher-Pearson; NaN for n < 3
  double excessKurtosis;  // adjusted (spreadsheet KURT); NaN for n < 4
  friend bool operator==(const DescriptiveStats&, const DescriptiveStats&) = default;
};

// Throws DegenerateSample for n < 2.
[[nodiscard]] DescriptiveStats describe(const Sample& s);

inline constexpr double kDefaultAlpha = 0.05;

// Built-in critical values (only alpha = 0.05 -> 2.502). Empty for any other
// level.
[[nodiscard]] std::optional<double> ad_critical_value(double alpha) noexcept;

// A fit passes when its statistic is strictly below the critical value.
[[nodiscard]] constexpr bool ad_pass(double statistic, double criticalValue) noexcept {
  return statistic < criticalValue;
}

struct GofResult {
  Family family;
  double statistic;
  double alpha;
  double criticalValue;
  bool pass;
  friend bool operator==(const GofResult&, const GofResult&) = default;
};

// Anderson-Darling A^2 from already computed cdf values (any order; sorted
// internally). Values are clamped to [1e-300, 1 - 1e-16].
[[nodiscard]] double anderson_darling_statistic(std::span<const double> cdfValues);

// Anderson-Darling test of `s` against `fp`. The critical value defaults to the
// built-in table; any alpha not in the table needs an explicit critical value
// or DomainError is thrown.
[[nodiscard]] GofResult anderson_darling(const Sample& s, const FamilyParams& fp,
                                         double alpha = kDefaultAlpha,
                                         std::optional<double> criticalValue = std::nullopt);

// Plotting position i/(n+1), i = 1..n.
[[nodiscard]] double plotting_position(std::size_t i, std::size_t n) noexcept;

struct QqPoint {
  double p;
  double theoretical;
  double observed;
  friend bool operator==(const QqPoint&, const QqPoint&) = default;
};

struct DiffPoint {
  double x;
  double diff;
  friend bool operator==(const DiffPoint&, const DiffPoint&) = default;
};

[[nodiscard]] std::vector<QqPoint> qq_series(const Sample& s, const FamilyParams& fp);
[[nodiscard]] std::vector<DiffPoint> probability_difference(const Sample& s,
                                                            const FamilyParams& fp);

struct Selection {
  Family family;
  // False when no candidate passed and the smallest statistic was taken anyway.
  bool passed;
  friend bool operator==(const Selection&, const Selection&) = default;
};

// Smallest A^2 among passing fits, else smallest overall. Ties go to the
// family that comes first in kAllFamilies. Throws EmptyInput.
[[nodiscard]] Selection select_best(std::span<const GofResult> gofs);

}  // namespace evt
