#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "evt/report.hpp"

namespace evt {

inline constexpr std::size_t kPdfGridPoints = 512;
inline constexpr double kReturnCurveMinPeriod = 1.5;
inline constexpr double kReturnCurveMaxPeriod = 500.0;
inline constexpr std::size_t kReturnCurvePoints = 128;

// Writes into outDir (created if needed):
//   timeseries.csv          year,value  (year = 1..n when the dataset has none)
//   pdf_<family>.csv        x,pdf       512 points over [min - 0.1 range, max + 0.1 range]
//   qq_<family>.csv         p,theoretical,observed
//   probdiff_<family>.csv   x,diff
//   return_curve.csv        period,level  for the selected family
// Families whose fit failed get no pdf/qq/probdiff files. Returns the paths
// written. Throws IoError.
std::vector<std::filesystem::path> emit_plot_data(const AnalysisReport& r, const Dataset& ds,
                                                  const std::filesystem::path& outDir);

}  // namespace evt
