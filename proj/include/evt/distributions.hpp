#pragma once

// Probability functions for the block-maxima families.
//
// Parameterizations:
//   Gumbel   F(x) = exp(-exp(-(x - location)/scale))
//   Frechet  F(x) = exp(-((x - location)/scale)^(-shape)),   x > location
//   Weibull  F(x) = 1 - exp(-(x/scale)^shape),                x > 0
//   GEV      F(x) = exp(-[1 + shape (x - location)/scale]^(-1/shape))
//
// GEV shape > 0 gives a heavy right tail, shape < 0 a bounded upper tail and
// |shape| < kGumbelLimit is evaluated with the Gumbel formulas. "Weibull" is
// the ordinary minimum-type Weibull; the reversed (maxima) Weibull is the GEV
// with negative shape, see reversed_weibull().

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "evt/sample.hpp"

namespace evt {

enum class Family { Gumbel, Frechet, Weibull, Gev };

inline constexpr std::array<Family, 4> kAllFamilies = {Family::Gumbel, Family::Frechet,
                                                       Family::Weibull, Family::Gev};

// Lower-case identifier used on the command line and in structured output.
[[nodiscard]] std::string_view to_string(Family f) noexcept;
// Human-readable name used in text reports.
[[nodiscard]] std::string_view display_name(Family f) noexcept;
[[nodiscard]] std::optional<Family> parse_family(std::string_view name) noexcept;

inline constexpr double kGumbelLimit = 1e-8;

struct GumbelParams {
  double location = 0.0;
  double scale = 1.0;
  friend bool operator==(const GumbelParams&, const GumbelParams&) = default;
};

struct FrechetParams {
  double shape = 1.0;
  double scale = 1.0;
  double location = 0.0;
  friend bool operator==(const FrechetParams&, const FrechetParams&) = default;
};

struct WeibullParams {
  double shape = 1.0;
  double scale = 1.0;
  friend bool operator==(const WeibullParams&, const WeibullParams&) = default;
};

struct GevParams {
  double location = 0.0;
  double scale = 1.0;
  double shape = 0.0;
  friend bool operator==(const GevParams&, const GevParams&) = default;
};

using FamilyParams = std::variant<GumbelParams, FrechetParams, WeibullParams, GevParams>;

[[nodiscard]] Family family_of(const FamilyParams& fp) noexcept;

// Throws DomainError unless every scale/shape constraint holds and all fields
// are finite.
void validate(const FamilyParams& fp);

// Builds a parameter record from positional values: gumbel (location, scale),
// frechet (shape, scale[, location]), weibull (shape, scale), gev (location,
// scale, shape). Throws DomainError on a wrong count or invalid values.
[[nodiscard]] FamilyParams make_params(Family family, std::span<const double> values);

// Reversed Weibull with upper endpoint `upper`,
// F(x) = exp(-((upper - x)/scale)^shape) for x < upper, as a GEV.
[[nodiscard]] GevParams reversed_weibull(double shape, double scale, double upper);

struct Interval {
  double lower;
  double upper;
  [[nodiscard]] bool contains(double x) const noexcept { return x > lower && x < upper; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Open interval on which the density is positive.
[[nodiscard]] Interval support(const FamilyParams& fp);

[[nodiscard]] double cdf(const FamilyParams& fp, double x);
[[nodiscard]] double pdf(const FamilyParams& fp, double x);
// -infinity outside the support.
[[nodiscard]] double log_pdf(const FamilyParams& fp, double x);
// Throws DomainError unless 0 < p < 1.
[[nodiscard]] double quantile(const FamilyParams& fp, double p);

// Inverse-transform draws from a seeded 64-bit Mersenne Twister. Throws
// DomainError for n == 0.
[[nodiscard]] Sample sample(const FamilyParams& fp, std::size_t n, std::uint64_t seed);

}  // namespace evt
