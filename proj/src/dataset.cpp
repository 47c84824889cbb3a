#include "evt/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "evt/errors.hpp"

namespace evt {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.push_back(trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool looks_numeric(const std::vector<std::string_view>& fields) {
  for (auto f : fields) {
    if (!parse_double(f)) return false;
  }
  return true;
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

Dataset parse_csv(const std::string& text, std::string label, ColumnSpec columns) {
  std::vector<double> values;
  std::vector<int> years;
  std::size_t expectedFields = 0;
  bool seenContent = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t row = 0;
  while (std::getline(in, raw)) {
    ++row;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const auto fields = split_fields(line);

    if (!seenContent) {
      seenContent = true;
      if (!looks_numeric(fields)) continue;  // header row
    }

    if (expectedFields == 0) {
      switch (columns) {
        case ColumnSpec::ValueOnly: expectedFields = 1; break;
        case ColumnSpec::YearValue: expectedFields = 2; break;
        case ColumnSpec::Auto:
          if (fields.size() != 1 && fields.size() != 2) {
            throw ParseError(row, "expected 1 or 2 columns, found " +
                                      std::to_string(fields.size()));
          }
          expectedFields = fields.size();
          break;
      }
    }
    if (fields.size() != expectedFields) {
      throw ParseError(row, "expected " + std::to_string(expectedFields) + " column(s), found " +
                                std::to_string(fields.size()));
    }

    const std::string_view valueField = fields.back();
    const auto value = parse_double(valueField);
    if (!value) throw ParseError(row, "not a number: " + quoted(valueField));
    if (!std::isfinite(*value)) throw ParseError(row, "value is not finite");

    if (expectedFields == 2) {
      const auto year = parse_int(fields.front());
      if (!year) throw ParseError(row, "not an integer year: " + quoted(fields.front()));
      if (!years.empty() && *year <= years.back()) {
        throw ParseError(row, "years must be strictly increasing");
      }
      years.push_back(*year);
    }
    values.push_back(*value);
  }

  if (values.empty()) throw EmptyDataset("no observations in " + label);
  Dataset ds{std::move(label), std::nullopt, Sample(std::move(values))};
  if (expectedFields == 2) ds.years = std::move(years);
  return ds;
}

Dataset load_csv(const std::filesystem::path& path, ColumnSpec columns) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw FileNotFound("input file not found: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound("cannot open input file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), path.stem().string(), columns);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

std::string format_values(const Sample& s) {
  std::string out;
  char buf[32];
  for (double v : s.values()) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
    out.push_back('\n');
  }
  return out;
}

}  // namespace evt
