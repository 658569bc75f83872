#pragma once

// Numeric result tables and their CSV form. Files start with `# key: value`
// metadata lines, then one header row, then one row per grid point. The
// last column is a free-text `flags` field ("ok" when nothing went wrong).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectra {

struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;  // numeric columns, flags excluded
  std::vector<std::vector<double>> rows;
  std::vector<std::string> flags;    // one per row

  std::size_t column(std::string_view name) const;  // throws if absent
  bool has_column(std::string_view name) const;
  std::vector<double> values(std::string_view name) const;
  const std::string* meta(std::string_view key) const;
  void set_meta(std::string key, std::string value);
  void add_row(std::vector<double> row, std::string flag = "ok");
};

/// %.17g, with nan / inf / -inf spelled out.
std::string format_number(double v);

std::string to_csv(const Table& t);
Table parse_csv(std::string_view text);

/// Writes to a sibling temporary file and renames it over `path`.
void write_csv(const Table& t, const std::string& path);
Table read_csv(const std::string& path);

/// Equality that treats NaN cells as equal to NaN.
bool same_contents(const Table& a, const Table& b);

}  // namespace spectra
