#include "evt/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "evt/errors.hpp"

namespace evt {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kCdfFloor = 1e-300;
constexpr double kCdfCeil = 1.0 - 1e-16;

struct CriticalValue {
  double alpha;
  double value;
};

// All-parameters-known A^2 critical values.
constexpr CriticalValue kCriticalValues[] = {{0.05, 2.502}};

}  // namespace

DescriptiveStats describe(const Sample& s) {
  const std::size_t n = s.size();
  if (n < 2) throw DegenerateSample("descriptive statistics need at least two observations");
  const double nd = static_cast<double>(n);
  const auto values = s.values();

  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / nd;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : values) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const double variance = m2 / (nd - 1.0);
  const double sd = std::sqrt(variance);

  double skewness = kNaN;
  double kurtosis = kNaN;
  if (m2 > 0.0) {
    if (n >= 3) {
      const double g1 = (m3 / nd) / std::pow(m2 / nd, 1.5);
      skewness = g1 * std::sqrt(nd * (nd - 1.0)) / (nd - 2.0);
    }
    if (n >= 4) {
      const double sum4 = m4 / (variance * variance);
      kurtosis = nd * (nd + 1.0) / ((nd - 1.0) * (nd - 2.0) * (nd - 3.0)) * sum4 -
                 3.0 * (nd - 1.0) * (nd - 1.0) / ((nd - 2.0) * (nd - 3.0));
    }
  }

  return DescriptiveStats{
      .n = n,
      .range = s.max() - s.min(),
      .mean = mean,
      .variance = variance,
      .stdDev = sd,
      .coefVariationPct = mean != 0.0 ? 100.0 * sd / mean : kNaN,
      .stdError = sd / std::sqrt(nd),
      .skewness = skewness,
      .excessKurtosis = kurtosis,
  };
}

std::optional<double> ad_critical_value(double alpha) noexcept {
  for (const auto& cv : kCriticalValues) {
    if (std::abs(cv.alpha - alpha) < 1e-12) return cv.value;
  }
  return std::nullopt;
}

double anderson_darling_statistic(std::span<const double> cdfValues) {
  if (cdfValues.empty()) throw EmptyInput("Anderson-Darling needs at least one value");
  std::vector<double> u(cdfValues.begin(), cdfValues.end());
  for (double& v : u) v = std::clamp(v, kCdfFloor, kCdfCeil);
  std::ranges::sort(u);

  const std::size_t n = u.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double weight = 2.0 * static_cast<double>(i + 1) - 1.0;
    sum += weight * (std::log(u[i]) + std::log1p(-u[n - 1 - i]));
  }
  const double nd = static_cast<double>(n);
  return -nd - sum / nd;
}

GofResult anderson_darling(const Sample& s, const FamilyParams& fp, double alpha,
                           std::optional<double> criticalValue) {
  validate(fp);
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  const std::optional<double> crit = criticalValue ? criticalValue : ad_critical_value(alpha);
  if (!crit) {
    throw DomainError("no built-in critical value for alpha = " + std::to_string(alpha) +
                      "; supply one explicitly");
  }
  if (!(*crit > 0.0) || !std::isfinite(*crit)) throw DomainError("critical value must be > 0");

  std::vector<double> u;
  u.reserve(s.size());
  for (double x : s.values()) u.push_back(cdf(fp, x));
  const double a2 = anderson_darling_statistic(u);
  return {family_of(fp), a2, alpha, *crit, ad_pass(a2, *crit)};
}

double plotting_position(std::size_t i, std::size_t n) noexcept {
  return static_cast<double>(i) / static_cast<double>(n + 1);
}

std::vector<QqPoint> qq_series(const Sample& s, const FamilyParams& fp) {
  const std::vector<double> xs = s.sorted();
  std::vector<QqPoint> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double p = plotting_position(i + 1, xs.size());
    out.push_back({p, quantile(fp, p), xs[i]});
  }
  return out;
}

std::vector<DiffPoint> probability_difference(const Sample& s, const FamilyParams& fp) {
  const std::vector<double> xs = s.sorted();
  std::vector<DiffPoint> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.push_back({xs[i], plotting_position(i + 1, xs.size()) - cdf(fp, xs[i])});
  }
  return out;
}

Selection select_best(std::span<const GofResult> gofs) {
  if (gofs.empty()) throw EmptyInput("no goodness-of-fit results to select from");
  const bool anyPass = std::ranges::any_of(gofs, &GofResult::pass);

  const GofResult* best = nullptr;
  for (const GofResult& g : gofs) {
    if (anyPass && !g.pass) continue;
    if (best == nullptr || g.statistic < best->statistic ||
        (g.statistic == best->statistic && g.family < best->family)) {
      best = &g;
    }
  }
  return {best->family, anyPass};
}

}  // namespace evt
