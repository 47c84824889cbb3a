#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evt/distributions.hpp"
#include "evt/nelder_mead.hpp"
#include "evt/sample.hpp"

namespace evt {

struct FitResult {
  FamilyParams params;
  double logLikelihood;
  bool converged;
  std::size_t iterations;
  FamilyParams initialParams;
  friend bool operator==(const FitResult&, const FitResult&) = default;
};

// Sum of log densities; -infinity if any observation is outside the support.
[[nodiscard]] double log_likelihood(const FamilyParams& fp, const Sample& s);

// Moment-matching start values. Gumbel matches mean and variance; GEV is the
// Gumbel start with shape 0.1; Frechet and Weibull match a Gumbel (max resp.
// min) to the log-data. Throws DegenerateSample (n < 2 or zero spread) and
// SupportError (non-positive data for Frechet/Weibull).
[[nodiscard]] FamilyParams initial_params(Family family, const Sample& s);

// Maximum-likelihood fit. Scales and positive shapes are searched on the log
// scale; the GEV shape is unconstrained. Requires n >= 3. A run that exhausts
// maxIterations is returned with converged == false rather than thrown.
[[nodiscard]] FitResult fit_mle(Family family, const Sample& s, const OptimizerConfig& cfg = {});

// One entry per family; `fit` is empty and `error` set when that family could
// not be fitted.
struct FitEntry {
  Family family;
  std::optional<FitResult> fit;
  std::string error;
  friend bool operator==(const FitEntry&, const FitEntry&) = default;
};

// Fits all four families in the order of kAllFamilies.
[[nodiscard]] std::vector<FitEntry> fit_all(const Sample& s, const OptimizerConfig& cfg = {});

}  // namespace evt
