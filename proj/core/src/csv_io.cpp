// core/src/csv_io.cpp

// Copyright 2026  gaborfeat authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "gaborfeat/csv_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gaborfeat {

namespace {

void format_value(double v, std::string* out) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out->append(buf);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cells;
}

bool parse_double(const std::string& cell, double* out) {
  if (cell.empty()) return false;
  char* end = nullptr;
  *out = std::strtod(cell.c_str(), &end);
  return end == cell.c_str() + cell.size();
}

}  // namespace

void write_csv_matrix(const Matrix& m, const std::vector<std::string>& row_names,
                      const std::vector<std::string>& col_names,
                      const std::string& path) {
  if (!row_names.empty() && static_cast<int>(row_names.size()) != m.rows())
    throw std::invalid_argument("write_csv_matrix: row name count " +
                                std::to_string(row_names.size()) +
                                " does not match " + std::to_string(m.rows()) +
                                " rows");
  if (!col_names.empty() && static_cast<int>(col_names.size()) != m.cols())
    throw std::invalid_argument("write_csv_matrix: column name count " +
                                std::to_string(col_names.size()) +
                                " does not match " + std::to_string(m.cols()) +
                                " columns");

  std::string text;
  if (!col_names.empty()) {
    if (!row_names.empty()) text += ',';
    for (size_t i = 0; i < col_names.size(); ++i) {
      if (i) text += ',';
      text += col_names[i];
    }
    text += '\n';
  }
  for (int r = 0; r < m.rows(); ++r) {
    if (!row_names.empty()) {
      text += row_names[r];
      if (m.cols() > 0) text += ',';
    }
    for (int c = 0; c < m.cols(); ++c) {
      if (c) text += ',';
      format_value(m(r, c), &text);
    }
    text += '\n';
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error(path + ": write failed");
}

CsvMatrix read_csv_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && lines.empty()) continue;
    lines.push_back(split_commas(line));
  }
  CsvMatrix out;
  if (lines.empty()) return out;

  // Header row: any non-numeric cell beyond a possible leading empty one.
  bool has_header = false;
  {
    const auto& first = lines.front();
    for (size_t i = 0; i < first.size(); ++i) {
      double v;
      if (i == 0 && first[i].empty()) {
        has_header = true;
        break;
      }
      if (!parse_double(first[i], &v)) {
        has_header = true;
        break;
      }
    }
  }
  size_t data_start = has_header ? 1 : 0;
  // Row names: first data cell non-numeric.
  bool has_row_names = false;
  if (data_start < lines.size() && !lines[data_start].empty()) {
    double v;
    has_row_names = !parse_double(lines[data_start][0], &v);
  }

  if (has_header) {
    const auto& first = lines.front();
    const size_t skip = (has_row_names || (!first.empty() && first[0].empty()))
                            ? 1
                            : 0;
    out.col_names.assign(first.begin() + skip, first.end());
  }

  const size_t n_rows = lines.size() - data_start;
  size_t n_cols = 0;
  if (n_rows > 0)
    n_cols = lines[data_start].size() - (has_row_names ? 1 : 0);
  out.values = Matrix(static_cast<int>(n_rows), static_cast<int>(n_cols));
  for (size_t r = 0; r < n_rows; ++r) {
    const auto& cells = lines[data_start + r];
    const size_t offset = has_row_names ? 1 : 0;
    if (cells.size() != n_cols + offset)
      throw std::runtime_error(path + ": ragged CSV row " +
                               std::to_string(data_start + r + 1));
    if (has_row_names) out.row_names.push_back(cells[0]);
    for (size_t c = 0; c < n_cols; ++c) {
      double v;
      if (!parse_double(cells[offset + c], &v))
        throw std::runtime_error(path + ": non-numeric cell in row " +
                                 std::to_string(data_start + r + 1));
      out.values(static_cast<int>(r), static_cast<int>(c)) = v;
    }
  }
  return out;
}

}  // namespace gaborfeat
