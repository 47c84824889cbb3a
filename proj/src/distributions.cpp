#include "evt/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <type_traits>

#include "evt/errors.hpp"

namespace evt {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("probability must lie in (0, 1), got " + std::to_string(p));
  }
}

bool is_gumbel_limit(const GevParams& g) { return std::abs(g.shape) < kGumbelLimit; }

// --- Gumbel ---------------------------------------------------------------

Interval support_of(const GumbelParams&) { return {-kInf, kInf}; }

double cdf_of(const GumbelParams& g, double x) {
  const double z = (x - g.location) / g.scale;
  return std::exp(-std::exp(-z));
}

double log_pdf_of(const GumbelParams& g, double x) {
  const double z = (x - g.location) / g.scale;
  return -std::log(g.scale) - z - std::exp(-z);
}

double quantile_of(const GumbelParams& g, double p) {
  return g.location - g.scale * std::log(-std::log(p));
}

// --- Frechet --------------------------------------------------------------

Interval support_of(const FrechetParams& f) { return {f.location, kInf}; }

double cdf_of(const FrechetParams& f, double x) {
  if (x <= f.location) return 0.0;
  const double z = (x - f.location) / f.scale;
  return std::exp(-std::pow(z, -f.shape));
}

double log_pdf_of(const FrechetParams& f, double x) {
  if (x <= f.location) return -kInf;
  const double z = (x - f.location) / f.scale;
  const double logz = std::log(z);
  return std::log(f.shape) - std::log(f.scale) - (1.0 + f.shape) * logz -
         std::exp(-f.shape * logz);
}

double quantile_of(const FrechetParams& f, double p) {
  return f.location + f.scale * std::exp(-std::log(-std::log(p)) / f.shape);
}

// --- Weibull (minimum type) -----------------------------------------------

Interval support_of(const WeibullParams&) { return {0.0, kInf}; }

double cdf_of(const WeibullParams& w, double x) {
  if (x <= 0.0) return 0.0;
  return -std::expm1(-std::pow(x / w.scale, w.shape));
}

double log_pdf_of(const WeibullParams& w, double x) {
  if (x <= 0.0) return -kInf;
  const double logz = std::log(x / w.scale);
  return std::log(w.shape) - std::log(w.scale) + (w.shape - 1.0) * logz -
         std::exp(w.shape * logz);
}

double quantile_of(const WeibullParams& w, double p) {
  return w.scale * std::exp(std::log(-std::log1p(-p)) / w.shape);
}

// --- GEV ------------------------------------------------------------------

GumbelParams as_gumbel(const GevParams& g) { return {g.location, g.scale}; }

Interval support_of(const GevParams& g) {
  if (is_gumbel_limit(g)) return {-kInf, kInf};
  const double bound = g.location - g.scale / g.shape;
  return g.shape > 0.0 ? Interval{bound, kInf} : Interval{-kInf, bound};
}

double cdf_of(const GevParams& g, double x) {
  if (is_gumbel_limit(g)) return cdf_of(as_gumbel(g), x);
  const double t = 1.0 + g.shape * (x - g.location) / g.scale;
  if (t <= 0.0) return g.shape > 0.0 ? 0.0 : 1.0;
  // t^(-1/k) with log1p so the reduced variate keeps full precision.
  const double y = std::exp(-std::log1p(g.shape * (x - g.location) / g.scale) / g.shape);
  return std::exp(-y);
}

double log_pdf_of(const GevParams& g, double x) {
  if (is_gumbel_limit(g)) return log_pdf_of(as_gumbel(g), x);
  const double kz = g.shape * (x - g.location) / g.scale;
  if (1.0 + kz <= 0.0) return -kInf;
  const double logt = std::log1p(kz);
  return -std::log(g.scale) - (1.0 + 1.0 / g.shape) * logt - std::exp(-logt / g.shape);
}

double quantile_of(const GevParams& g, double p) {
  if (is_gumbel_limit(g)) return quantile_of(as_gumbel(g), p);
  // (sigma/k)[(-ln p)^(-k) - 1] via expm1.
  return g.location + g.scale * std::expm1(-g.shape * std::log(-std::log(p))) / g.shape;
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

void check_positive(double v, const char* what) {
  check_finite(v, what);
  if (!(v > 0.0)) throw DomainError(std::string(what) + " must be > 0");
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Gumbel: return "gumbel";
    case Family::Frechet: return "frechet";
    case Family::Weibull: return "weibull";
    case Family::Gev: return "gev";
  }
  return "unknown";
}

std::string_view display_name(Family f) noexcept {
  switch (f) {
    case Family::Gumbel: return "Gumbel Max";
    case Family::Frechet: return "Frechet";
    case Family::Weibull: return "Weibull";
    case Family::Gev: return "GEV";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : kAllFamilies) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

Family family_of(const FamilyParams& fp) noexcept {
  return std::visit(overloaded{[](const GumbelParams&) { return Family::Gumbel; },
                               [](const FrechetParams&) { return Family::Frechet; },
                               [](const WeibullParams&) { return Family::Weibull; },
                               [](const GevParams&) { return Family::Gev; }},
                    fp);
}

void validate(const FamilyParams& fp) {
  std::visit(overloaded{[](const GumbelParams& g) {
                          check_finite(g.location, "location");
                          check_positive(g.scale, "scale");
                        },
                        [](const FrechetParams& f) {
                          check_positive(f.shape, "shape");
                          check_positive(f.scale, "scale");
                          check_finite(f.location, "location");
                        },
                        [](const WeibullParams& w) {
                          check_positive(w.shape, "shape");
                          check_positive(w.scale, "scale");
                        },
                        [](const GevParams& g) {
                          check_finite(g.location, "location");
                          check_positive(g.scale, "scale");
                          check_finite(g.shape, "shape");
                        }},
             fp);
}

FamilyParams make_params(Family family, std::span<const double> v) {
  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (v.size() < lo || v.size() > hi) {
      throw DomainError(std::string(to_string(family)) + " takes " + std::to_string(lo) +
                        (lo == hi ? "" : "-" + std::to_string(hi)) + " parameters, got " +
                        std::to_string(v.size()));
    }
  };
  FamilyParams fp;
  switch (family) {
    case Family::Gumbel:
      expect(2, 2);
      fp = GumbelParams{v[0], v[1]};
      break;
    case Family::Frechet:
      expect(2, 3);
      fp = FrechetParams{v[0], v[1], v.size() == 3 ? v[2] : 0.0};
      break;
    case Family::Weibull:
      expect(2, 2);
      fp = WeibullParams{v[0], v[1]};
      break;
    case Family::Gev:
      expect(3, 3);
      fp = GevParams{v[0], v[1], v[2]};
      break;
  }
  validate(fp);
  return fp;
}

GevParams reversed_weibull(double shape, double scale, double upper) {
  check_positive(shape, "shape");
  check_positive(scale, "scale");
  check_finite(upper, "upper endpoint");
  return {upper - scale, scale / shape, -1.0 / shape};
}

Interval support(const FamilyParams& fp) {
  validate(fp);
  return std::visit([](const auto& p) { return support_of(p); }, fp);
}

double cdf(const FamilyParams& fp, double x) {
  validate(fp);
  if (std::isnan(x)) throw DomainError("cdf argument is NaN");
  return std::visit([x](const auto& p) { return cdf_of(p, x); }, fp);
}

double log_pdf(const FamilyParams& fp, double x) {
  validate(fp);
  if (std::isnan(x)) throw DomainError("log_pdf argument is NaN");
  if (std::isinf(x)) return -kInf;
  return std::visit([x](const auto& p) { return log_pdf_of(p, x); }, fp);
}

double pdf(const FamilyParams& fp, double x) { return std::exp(log_pdf(fp, x)); }

double quantile(const FamilyParams& fp, double p) {
  validate(fp);
  require_probability(p);
  return std::visit([p](const auto& params) { return quantile_of(params, p); }, fp);
}

Sample sample(const FamilyParams& fp, std::size_t n, std::uint64_t seed) {
  validate(fp);
  if (n == 0) throw DomainError("sample size must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Top 53 bits, centred in their cell: strictly inside (0, 1).
    const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    out.push_back(std::visit([u](const auto& p) { return quantile_of(p, u); }, fp));
  }
  return Sample(std::move(out));
}

}  // namespace evt
