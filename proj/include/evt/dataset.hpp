#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "evt/sample.hpp"

namespace evt {

struct Dataset {
  std::string label;
  std::optional<std::vector<int>> years;  // same length as sample, strictly increasing
  Sample sample;
};

enum class ColumnSpec {
  Auto,       // decide from the first data row
  ValueOnly,  // one value per line
  YearValue,  // year,value
};

// Reads a comma-delimited annual-maxima file. A single header row is allowed as
// the first non-blank line; blank lines are skipped. Rows are numbered from 1
// by physical line.
// Throws FileNotFound, ParseError(row, reason) or EmptyDataset.
[[nodiscard]] Dataset load_csv(const std::filesystem::path& path,
                               ColumnSpec columns = ColumnSpec::Auto);

// Same, from in-memory text.
[[nodiscard]] Dataset parse_csv(const std::string& text, std::string label,
                                ColumnSpec columns = ColumnSpec::Auto);

// Writes `path` via a temporary sibling and a rename. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// One value per line with round-trip precision.
[[nodiscard]] std::string format_values(const Sample& s);

}  // namespace evt
