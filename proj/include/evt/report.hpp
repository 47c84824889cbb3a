#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evt/dataset.hpp"
#include "evt/diagnostics.hpp"
#include "evt/fitting.hpp"
#include "evt/return_levels.hpp"

namespace evt {

struct GofEntry {
  Family family;
  std::optional<GofResult> gof;  // empty when the family's fit failed
  std::string error;
  friend bool operator==(const GofEntry&, const GofEntry&) = default;
};

struct AnalysisReport {
  std::string label;
  DescriptiveStats descriptive;
  std::vector<FitEntry> fits;  // kAllFamilies order
  std::vector<GofEntry> gofs;  // aligned with fits
  Selection best;
  ReturnLevelTable returnLevels;  // for best.family
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct PipelineOptions {
  ReturnSpec returnSpec{};
  double alpha = kDefaultAlpha;
  std::optional<double> criticalValue;
  OptimizerConfig optimizer{};
};

// describe -> fit_all -> Anderson-Darling per fitted family -> select_best ->
// return levels of the selected family. Per-family failures are recorded in
// the report. Throws DegenerateSample for n < 3 and NumericalFailure when no
// family could be fitted at all.
[[nodiscard]] AnalysisReport run_pipeline(const Dataset& ds, const PipelineOptions& opts = {});

// True when at least one family's optimizer converged.
[[nodiscard]] bool any_converged(const AnalysisReport& r) noexcept;

enum class ReportFormat { Text, Json };

// Throws UnsupportedFormat.
[[nodiscard]] ReportFormat parse_report_format(std::string_view name);

[[nodiscard]] std::string emit_report(const AnalysisReport& r, ReportFormat format);

// Inverse of emit_report(r, ReportFormat::Json). Throws ParseError on malformed
// input (row is always 0).
[[nodiscard]] AnalysisReport parse_report_json(const std::string& json);

}  // namespace evt
