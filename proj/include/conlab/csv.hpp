// csv.hpp -- deterministic tabular output: header row, %.12g numbers,
// platform-independent bytes for identical inputs.
#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace conlab {

using CsvCell = std::variant<long long, double, std::string>;

inline std::string csv_format(const CsvCell& cell) {
  char buf[40];
  if (const auto* i = std::get_if<long long>(&cell)) {
    std::snprintf(buf, sizeof buf, "%lld", *i);
    return buf;
  }
  if (const auto* d = std::get_if<double>(&cell)) {
    std::snprintf(buf, sizeof buf, "%.12g", *d);
    return buf;
  }
  const std::string& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns)
      : columns_(std::move(columns)) {
    if (columns_.empty())
      throw std::invalid_argument("CsvWriter: no columns");
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) body_ += ',';
      body_ += csv_format(columns_[i]);
    }
    body_ += '\n';
  }

  void row(const std::vector<CsvCell>& cells) {
    if (cells.size() != columns_.size())
      throw std::invalid_argument("CsvWriter: row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) body_ += ',';
      body_ += csv_format(cells[i]);
    }
    body_ += '\n';
    ++rows_;
  }

  int rows() const { return rows_; }
  const std::string& str() const { return body_; }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body_;
  }

 private:
  std::vector<std::string> columns_;
  std::string body_;
  int rows_ = 0;
};

}  // namespace conlab
