#include "evt/return_levels.hpp"

#include <cmath>
#include <string>

#include "evt/errors.hpp"

namespace evt {
namespace {

void require_period(double period) {
  if (!(period > 1.0) || !std::isfinite(period)) {
    throw DomainError("return period must be a finite value > 1, got " + std::to_string(period));
  }
}

}  // namespace

ReturnSpec::ReturnSpec(std::vector<double> periods) : periods_(std::move(periods)) {
  if (periods_.empty()) throw DomainError("at least one return period is required");
  for (std::size_t i = 0; i < periods_.size(); ++i) {
    require_period(periods_[i]);
    if (i > 0 && !(periods_[i] > periods_[i - 1])) {
      throw DomainError("return periods must be strictly increasing");
    }
  }
}

double return_level(const FamilyParams& fp, double period) {
  require_period(period);
  return quantile(fp, 1.0 - 1.0 / period);
}

double gev_return_level_closed_form(const GevParams& gev, double period) {
  require_period(period);
  validate(gev);
  const double y = -std::log(1.0 - 1.0 / period);
  if (std::abs(gev.shape) < kGumbelLimit) return gev.location - gev.scale * std::log(y);
  return gev.location - (gev.scale / gev.shape) * (1.0 - std::pow(y, -gev.shape));
}

ReturnLevelTable return_level_table(const FamilyParams& fp, const ReturnSpec& spec) {
  ReturnLevelTable table;
  table.reserve(spec.periods().size());
  for (double p : spec.periods()) table.push_back({p, return_level(fp, p)});
  return table;
}

ReturnLevelTable return_curve(const FamilyParams& fp, double pMin, double pMax,
                              std::size_t nPoints) {
  require_period(pMin);
  require_period(pMax);
  if (!(pMin < pMax)) throw DomainError("return curve needs pMin < pMax");
  if (nPoints < 2) throw DomainError("return curve needs at least two points");

  const double logMin = std::log(pMin);
  const double logMax = std::log(pMax);
  ReturnLevelTable curve;
  curve.reserve(nPoints);
  for (std::size_t i = 0; i < nPoints; ++i) {
    double period;
    if (i == 0) {
      period = pMin;
    } else if (i + 1 == nPoints) {
      period = pMax;
    } else {
      const double t = static_cast<double>(i) / static_cast<double>(nPoints - 1);
      period = std::exp(logMin + t * (logMax - logMin));
    }
    curve.push_back({period, return_level(fp, period)});
  }
  return curve;
}

}  // namespace evt
