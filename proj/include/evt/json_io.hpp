#pragma once

// JSON encoders shared by the structured report and the CLI.

#include "evt/fitting.hpp"
#include "evt/report.hpp"
#include "json.hpp"

namespace evt {

// Non-finite numbers are written as null.
[[nodiscard]] nlohmann::json json_number(double v);
// null reads back as NaN.
[[nodiscard]] double json_read_number(const nlohmann::json& j);

// Family-specific keys: gumbel {location, scale}, frechet {shape, scale,
// location}, weibull {shape, scale}, gev {location, scale, shape}.
[[nodiscard]] nlohmann::json params_to_json(const FamilyParams& fp);
[[nodiscard]] FamilyParams params_from_json(Family family, const nlohmann::json& j);

[[nodiscard]] nlohmann::json fit_entry_to_json(const FitEntry& e);
[[nodiscard]] nlohmann::json gof_entry_to_json(const GofEntry& e);
[[nodiscard]] nlohmann::json return_levels_to_json(const ReturnLevelTable& t);

}  // namespace evt
