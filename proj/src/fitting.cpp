#include "evt/fitting.hpp"

#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <numeric>

#include "evt/errors.hpp"

namespace evt {
namespace {

constexpr double kGevStartShape = 0.1;
constexpr std::size_t kMinFitSize = 3;
constexpr int kMaxRestarts = 10;
constexpr int kMaxShapeHalvings = 40;

struct Moments {
  double mean;
  double sd;
};

Moments moments(std::span<const double> v) {
  const double n = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

// Gumbel (maximum) matched to mean and standard deviation.
GumbelParams gumbel_moments(const Moments& m) {
  const double scale = m.sd * std::sqrt(6.0) / std::numbers::pi;
  return {m.mean - std::numbers::egamma * scale, scale};
}

std::vector<double> positive_logs(const Sample& s, Family family) {
  std::vector<double> logs;
  logs.reserve(s.size());
  for (double x : s.values()) {
    if (!(x > 0.0)) {
      throw SupportError(std::string(display_name(family)) +
                         " requires strictly positive observations");
    }
    logs.push_back(std::log(x));
  }
  return logs;
}

void require_spread(const Sample& s) {
  if (s.size() < 2) throw DegenerateSample("at least two observations are required");
  if (s.min() == s.max()) throw DegenerateSample("sample has zero spread");
}

// Search coordinates. Location is standardized by the start value and scale,
// scale and positive shapes are on the log scale, so every coordinate vector
// maps to valid parameters and the search is equivariant under affine
// changes of the data.
class Parameterization {
 public:
  Parameterization(Family family, const FamilyParams& start) : family_(family), start_(start) {}

  [[nodiscard]] std::vector<double> to_coords(const FamilyParams& fp) const {
    switch (family_) {
      case Family::Gumbel: {
        const auto& g = std::get<GumbelParams>(fp);
        const auto& g0 = std::get<GumbelParams>(start_);
        return {(g.location - g0.location) / g0.scale, std::log(g.scale / g0.scale)};
      }
      case Family::Frechet: {
        const auto& f = std::get<FrechetParams>(fp);
        return {std::log(f.shape), std::log(f.scale)};
      }
      case Family::Weibull: {
        const auto& w = std::get<WeibullParams>(fp);
        return {std::log(w.shape), std::log(w.scale)};
      }
      case Family::Gev: {
        const auto& g = std::get<GevParams>(fp);
        const auto& g0 = std::get<GevParams>(start_);
        return {(g.location - g0.location) / g0.scale, std::log(g.scale / g0.scale), g.shape};
      }
    }
    return {};
  }

  [[nodiscard]] FamilyParams from_coords(std::span<const double> c) const {
    switch (family_) {
      case Family::Gumbel: {
        const auto& g0 = std::get<GumbelParams>(start_);
        return GumbelParams{g0.location + g0.scale * c[0], g0.scale * std::exp(c[1])};
      }
      case Family::Frechet: {
        const auto& f0 = std::get<FrechetParams>(start_);
        return FrechetParams{std::exp(c[0]), std::exp(c[1]), f0.location};
      }
      case Family::Weibull:
        return WeibullParams{std::exp(c[0]), std::exp(c[1])};
      case Family::Gev: {
        const auto& g0 = std::get<GevParams>(start_);
        return GevParams{g0.location + g0.scale * c[0], g0.scale * std::exp(c[1]), c[2]};
      }
    }
    return start_;
  }

  [[nodiscard]] std::vector<double> steps() const {
    switch (family_) {
      case Family::Gumbel:
        return {0.1, 0.1};
      case Family::Frechet:
      case Family::Weibull:
        return {0.1, 0.1};
      case Family::Gev:
        return {0.1, 0.1, 0.05};
    }
    return {};
  }

 private:
  Family family_;
  FamilyParams start_;
};

struct Optimum {
  FamilyParams params;
  double logLikelihood;
  bool converged;
  std::size_t iterations;
};

// Simplex search from `start`, restarted at its own optimum until the
// likelihood stops improving.
Optimum maximize(Family family, const Sample& s, const FamilyParams& start,
                 const OptimizerConfig& cfg) {
  const Parameterization param(family, start);
  auto objective = [&](std::span<const double> c) {
    const FamilyParams fp = param.from_coords(c);
    for (double v : c) {
      if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
    }
    try {
      return -log_likelihood(fp, s);
    } catch (const DomainError&) {
      // exp() overflow/underflow of a log-scale coordinate.
      return std::numeric_limits<double>::infinity();
    }
  };

  std::vector<double> coords = param.to_coords(start);
  const std::vector<double> steps = param.steps();
  double best = objective(coords);
  std::size_t iterations = 0;
  bool converged = false;
  for (int attempt = 0; attempt <= kMaxRestarts; ++attempt) {
    const SimplexResult r = nelder_mead(objective, coords, steps, cfg);
    iterations += r.iterations;
    converged = r.converged;
    const double improvement = best - r.value;
    if (r.value <= best) {
      coords = r.x;
      best = r.value;
    }
    if (!(improvement > cfg.functionTolerance) || iterations >= cfg.maxIterations) break;
  }
  return {param.from_coords(coords), -best, converged && std::isfinite(best), iterations};
}

}  // namespace

double log_likelihood(const FamilyParams& fp, const Sample& s) {
  validate(fp);
  double total = 0.0;
  for (double x : s.values()) {
    const double lp = log_pdf(fp, x);
    if (lp == -std::numeric_limits<double>::infinity()) return lp;
    total += lp;
  }
  return total;
}

FamilyParams initial_params(Family family, const Sample& s) {
  require_spread(s);
  switch (family) {
    case Family::Gumbel:
      return gumbel_moments(moments(s.values()));
    case Family::Gev: {
      const GumbelParams g = gumbel_moments(moments(s.values()));
      return GevParams{g.location, g.scale, kGevStartShape};
    }
    case Family::Frechet: {
      // log X of a Frechet is Gumbel(max) with location log(scale) and scale 1/shape.
      const GumbelParams g = gumbel_moments(moments(positive_logs(s, family)));
      return FrechetParams{1.0 / g.scale, std::exp(g.location), 0.0};
    }
    case Family::Weibull: {
      // log X of a Weibull is Gumbel(min): mean log(scale) - gamma/shape,
      // sd pi/(shape sqrt 6).
      const Moments m = moments(positive_logs(s, family));
      const double shape = std::numbers::pi / (m.sd * std::sqrt(6.0));
      return WeibullParams{shape, std::exp(m.mean + std::numbers::egamma / shape)};
    }
  }
  throw DomainError("unknown family");
}

FitResult fit_mle(Family family, const Sample& s, const OptimizerConfig& cfg) {
  validate(cfg);
  if (s.size() < kMinFitSize) {
    throw DegenerateSample("at least " + std::to_string(kMinFitSize) +
                           " observations are required for fitting");
  }
  FamilyParams start = initial_params(family, s);

  if (family == Family::Gev) {
    // Pull the start shape toward the Gumbel ridge until every observation is
    // inside the support.
    auto& gev = std::get<GevParams>(start);
    for (int i = 0; i < kMaxShapeHalvings && !std::isfinite(log_likelihood(start, s)); ++i) {
      gev.shape /= 2.0;
    }
    if (!std::isfinite(log_likelihood(start, s))) gev.shape = 0.0;
  }
  if (!std::isfinite(log_likelihood(start, s))) {
    throw SupportError(std::string(display_name(family)) +
                       ": no feasible starting point for this sample");
  }

  Optimum best = maximize(family, s, start, cfg);

  if (family == Family::Gev) {
    // Second start on the Gumbel ridge, so the GEV optimum is never worse than
    // the nested Gumbel fit.
    const FitResult gumbel = fit_mle(Family::Gumbel, s, cfg);
    const auto& g = std::get<GumbelParams>(gumbel.params);
    const Optimum ridge = maximize(family, s, GevParams{g.location, g.scale, 0.0}, cfg);
    const std::size_t total = best.iterations + ridge.iterations;
    if (ridge.logLikelihood > best.logLikelihood) best = ridge;
    best.iterations = total;
  }

  return {best.params, best.logLikelihood, best.converged, best.iterations, start};
}

std::vector<FitEntry> fit_all(const Sample& s, const OptimizerConfig& cfg) {
  std::array<std::future<FitEntry>, kAllFamilies.size()> pending;
  for (std::size_t i = 0; i < kAllFamilies.size(); ++i) {
    const Family family = kAllFamilies[i];
    pending[i] = std::async(std::launch::async, [family, &s, &cfg] {
      FitEntry entry{family, std::nullopt, {}};
      try {
        entry.fit = fit_mle(family, s, cfg);
      } catch (const Error& e) {
        entry.error = e.what();
      }
      return entry;
    });
  }
  std::vector<FitEntry> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace evt
