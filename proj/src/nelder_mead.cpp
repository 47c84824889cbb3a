#include "evt/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "evt/errors.hpp"

namespace evt {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

using Point = std::vector<double>;

// NaN and -inf are mapped to +inf so every non-finite vertex ranks worst.
double sanitize(double v) {
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

Point affine(const Point& base, const Point& toward, double t) {
  Point out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + t * (toward[i] - base[i]);
  return out;
}

}  // namespace

void validate(const OptimizerConfig& cfg) {
  if (cfg.maxIterations == 0) throw DomainError("maxIterations must be > 0");
  if (!(cfg.functionTolerance > 0.0)) throw DomainError("functionTolerance must be > 0");
  if (!(cfg.parameterTolerance > 0.0)) throw DomainError("parameterTolerance must be > 0");
}

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> start, std::span<const double> step,
                          const OptimizerConfig& cfg) {
  validate(cfg);
  const std::size_t dim = start.size();
  if (dim == 0 || step.size() != dim) throw DomainError("simplex start/step size mismatch");

  auto eval = [&f](const Point& p) { return sanitize(f(std::span<const double>(p))); };

  std::vector<Point> vertex(dim + 1, Point(start.begin(), start.end()));
  for (std::size_t i = 0; i < dim; ++i) vertex[i + 1][i] += step[i];
  std::vector<double> value(dim + 1);
  for (std::size_t j = 0; j <= dim; ++j) value[j] = eval(vertex[j]);

  std::vector<std::size_t> order(dim + 1);
  auto sort_vertices = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    std::vector<Point> v2(dim + 1);
    std::vector<double> f2(dim + 1);
    for (std::size_t j = 0; j <= dim; ++j) {
      v2[j] = std::move(vertex[order[j]]);
      f2[j] = value[order[j]];
    }
    vertex = std::move(v2);
    value = std::move(f2);
  };

  auto spread = [&] {
    if (!std::isfinite(value[dim])) return std::numeric_limits<double>::infinity();
    return value[dim] - value[0];
  };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t j = 1; j <= dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) {
        d = std::max(d, std::abs(vertex[j][i] - vertex[0][i]));
      }
    }
    return d;
  };

  std::size_t iter = 0;
  sort_vertices();
  while (iter < cfg.maxIterations) {
    if (spread() <= cfg.functionTolerance && diameter() <= cfg.parameterTolerance) break;
    ++iter;

    Point centroid(dim, 0.0);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += vertex[j][i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const Point reflected = affine(centroid, vertex[dim], -kReflect);
    const double fr = eval(reflected);

    if (fr < value[0]) {
      const Point expanded = affine(centroid, reflected, kExpand);
      const double fe = eval(expanded);
      if (fe < fr) {
        vertex[dim] = expanded;
        value[dim] = fe;
      } else {
        vertex[dim] = reflected;
        value[dim] = fr;
      }
    } else if (fr < value[dim - 1]) {
      vertex[dim] = reflected;
      value[dim] = fr;
    } else {
      const bool outside = fr < value[dim];
      const Point contracted = affine(centroid, outside ? reflected : vertex[dim], kContract);
      const double fc = eval(contracted);
      if (fc < (outside ? fr : value[dim])) {
        vertex[dim] = contracted;
        value[dim] = fc;
      } else {
        for (std::size_t j = 1; j <= dim; ++j) {
          vertex[j] = affine(vertex[0], vertex[j], kShrink);
          value[j] = eval(vertex[j]);
        }
      }
    }
    sort_vertices();
  }

  return {vertex[0], value[0], iter, spread() <= cfg.functionTolerance};
}

}  // namespace evt
