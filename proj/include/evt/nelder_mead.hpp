#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace evt {

struct OptimizerConfig {
  std::size_t maxIterations = 10000;
  double functionTolerance = 1e-8;
  double parameterTolerance = 1e-8;
  friend bool operator==(const OptimizerConfig&, const OptimizerConfig&) = default;
};

// Throws DomainError if any field is non-positive.
void validate(const OptimizerConfig& cfg);

struct SimplexResult {
  std::vector<double> x;
  double value;
  std::size_t iterations;
  // Final spread of vertex values is within functionTolerance.
  bool converged;
};

// Minimizes `f` with the Nelder-Mead simplex (reflection 1, expansion 2,
// contraction 1/2, shrink 1/2). The initial simplex is `start` plus one vertex
// per coordinate displaced by `step[i]`. Non-finite values (including +inf for
// infeasible points) always rank worst. Stops once the value spread is within
// functionTolerance and the simplex diameter within parameterTolerance, or
// after maxIterations.
[[nodiscard]] SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                                        std::span<const double> start,
                                        std::span<const double> step,
                                        const OptimizerConfig& cfg);

}  // namespace evt
