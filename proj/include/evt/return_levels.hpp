#pragma once

#include <cstddef>
#include <vector>

#include "evt/distributions.hpp"

namespace evt {

inline const std::vector<double> kDefaultReturnPeriods = {5, 10, 50, 100, 200};

// Strictly increasing return periods, each > 1 year.
class ReturnSpec {
 public:
  explicit ReturnSpec(std::vector<double> periods = kDefaultReturnPeriods);
  [[nodiscard]] const std::vector<double>& periods() const noexcept { return periods_; }

 private:
  std::vector<double> periods_;
};

struct ReturnLevel {
  double period;
  double level;
  friend bool operator==(const ReturnLevel&, const ReturnLevel&) = default;
};

using ReturnLevelTable = std::vector<ReturnLevel>;

// Level exceeded on average once every `period` blocks: the (1 - 1/period)
// quantile. Throws DomainError for period <= 1.
[[nodiscard]] double return_level(const FamilyParams& fp, double period);

// GEV closed form mu - (sigma/k)[1 - (-log(1 - 1/P))^(-k)], written out
// independently of quantile(); used to cross-check return_level().
[[nodiscard]] double gev_return_level_closed_form(const GevParams& gev, double period);

[[nodiscard]] ReturnLevelTable return_level_table(const FamilyParams& fp, const ReturnSpec& spec);

// nPoints log-spaced periods from pMin to pMax (both included).
[[nodiscard]] ReturnLevelTable return_curve(const FamilyParams& fp, double pMin, double pMax,
                                            std::size_t nPoints);

}  // namespace evt
