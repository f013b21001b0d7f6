#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cohort::csv {

/// Shortest round-trip decimal form of a double (to_chars), locale-free.
std::string format_double(double value);

void append_field(std::string& line, std::string_view field);
void append_field(std::string& line, double value);
void append_field(std::string& line, std::int64_t value);

/// Splits one CSV line on commas. No quoting: the formats used here never
/// embed commas. Trailing '\r' is stripped.
std::vector<std::string> split_line(std::string_view line);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a named column, or -1.
  int column(std::string_view name) const;
};

Table read_file(const std::filesystem::path& path, std::size_t max_rows);

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace cohort::csv
