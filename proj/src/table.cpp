#include "spectra/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

namespace {

std::string clean_flag(std::string s) {
  std::replace_if(s.begin(), s.end(),
                  [](char c) { return c == ',' || c == '\n' || c == '\r'; }, ' ');
  return s.empty() ? "ok" : s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

double parse_number(std::string_view s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorCode::Parse, "bad number '" + std::string(s) + "'");
  }
  return v;
}

bool same_number(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || a == b;
}

}  // namespace

std::size_t Table::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    fail(ErrorCode::InvalidArgument, "no column '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - columns.begin());
}

bool Table::has_column(std::string_view name) const {
  return std::find(columns.begin(), columns.end(), name) != columns.end();
}

std::vector<double> Table::values(std::string_view name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

const std::string* Table::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return &v;
  }
  return nullptr;
}

void Table::set_meta(std::string key, std::string value) {
  for (auto& [k, v] : metadata) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  metadata.emplace_back(std::move(key), std::move(value));
}

void Table::add_row(std::vector<double> row, std::string flag) {
  if (row.size() != columns.size()) {
    fail(ErrorCode::Internal, "row width does not match the header");
  }
  rows.push_back(std::move(row));
  flags.push_back(clean_flag(std::move(flag)));
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::ostringstream out;
  for (const auto& [k, v] : t.metadata) out << "# " << k << ": " << v << '\n';
  for (const auto& c : t.columns) out << c << ',';
  out << "flags\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (double v : t.rows[i]) out << format_number(v) << ',';
    out << t.flags[i] << '\n';
  }
  return out.str();
}

Table parse_csv(std::string_view text) {
  Table t;
  bool header = false;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header && line.starts_with("# ")) {
      const auto colon = line.find(": ");
      if (colon == std::string_view::npos) fail(ErrorCode::Parse, "bad metadata line");
      t.metadata.emplace_back(std::string(line.substr(2, colon - 2)),
                              std::string(line.substr(colon + 2)));
      continue;
    }
    auto cells = split(line, ',');
    if (!header) {
      if (cells.empty() || cells.back() != "flags") {
        fail(ErrorCode::Parse, "header must end with a flags column");
      }
      for (std::size_t i = 0; i + 1 < cells.size(); ++i) t.columns.emplace_back(cells[i]);
      header = true;
      continue;
    }
    if (cells.size() != t.columns.size() + 1) {
      fail(ErrorCode::Parse, "row has " + std::to_string(cells.size()) +
                                 " cells, expected " +
                                 std::to_string(t.columns.size() + 1));
    }
    std::vector<double> row;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) row.push_back(parse_number(cells[i]));
    t.rows.push_back(std::move(row));
    t.flags.emplace_back(cells.back());
  }
  if (!header) fail(ErrorCode::Parse, "missing header row");
  return t;
}

void write_csv(const Table& t, const std::string& path) {
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot write " + tmp.string());
    out << to_csv(t);
    if (!out.flush()) fail(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) fail(ErrorCode::Io, "cannot rename to " + path + ": " + ec.message());
}

Table read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

bool same_contents(const Table& a, const Table& b) {
  if (a.metadata != b.metadata || a.columns != b.columns || a.flags != b.flags ||
      a.rows.size() != b.rows.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (!std::equal(a.rows[i].begin(), a.rows[i].end(), b.rows[i].begin(),
                    b.rows[i].end(), same_number)) {
      return false;
    }
  }
  return true;
}

}  // namespace spectra
