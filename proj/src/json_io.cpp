#include "evt/json_io.hpp"

#include <cmath>
#include <limits>
#include <type_traits>

#include "evt/errors.hpp"

namespace evt {

using nlohmann::json;

json json_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double json_read_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json params_to_json(const FamilyParams& fp) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GumbelParams>) {
          return {{"location", p.location}, {"scale", p.scale}};
        } else if constexpr (std::is_same_v<T, FrechetParams>) {
          return {{"shape", p.shape}, {"scale", p.scale}, {"location", p.location}};
        } else if constexpr (std::is_same_v<T, WeibullParams>) {
          return {{"shape", p.shape}, {"scale", p.scale}};
        } else {
          return {{"location", p.location}, {"scale", p.scale}, {"shape", p.shape}};
        }
      },
      fp);
}

FamilyParams params_from_json(Family family, const json& j) {
  switch (family) {
    case Family::Gumbel:
      return GumbelParams{j.at("location").get<double>(), j.at("scale").get<double>()};
    case Family::Frechet:
      return FrechetParams{j.at("shape").get<double>(), j.at("scale").get<double>(),
                           j.at("location").get<double>()};
    case Family::Weibull:
      return WeibullParams{j.at("shape").get<double>(), j.at("scale").get<double>()};
    case Family::Gev:
      return GevParams{j.at("location").get<double>(), j.at("scale").get<double>(),
                       j.at("shape").get<double>()};
  }
  throw ParseError(0, "unknown family");
}

json fit_entry_to_json(const FitEntry& e) {
  json f{{"family", to_string(e.family)}};
  if (e.fit) {
    f["status"] = "ok";
    f["params"] = params_to_json(e.fit->params);
    f["log_likelihood"] = json_number(e.fit->logLikelihood);
    f["converged"] = e.fit->converged;
    f["iterations"] = e.fit->iterations;
    f["initial_params"] = params_to_json(e.fit->initialParams);
  } else {
    f["status"] = "error";
    f["error"] = e.error;
  }
  return f;
}

json gof_entry_to_json(const GofEntry& e) {
  json g{{"family", to_string(e.family)}};
  if (e.gof) {
    g["status"] = "ok";
    g["statistic"] = json_number(e.gof->statistic);
    g["alpha"] = e.gof->alpha;
    g["critical_value"] = e.gof->criticalValue;
    g["pass"] = e.gof->pass;
  } else {
    g["status"] = "error";
    g["error"] = e.error;
  }
  return g;
}

json return_levels_to_json(const ReturnLevelTable& t) {
  json out = json::array();
  for (const ReturnLevel& rl : t) {
    out.push_back({{"period", rl.period}, {"level", json_number(rl.level)}});
  }
  return out;
}

}  // namespace evt
