// core/include/gaborfeat/csv_io.hpp

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

#pragma once

#include <string>
#include <vector>

#include "gaborfeat/matrix.hpp"

namespace gaborfeat {

// Writes a matrix as UTF-8 CSV with "\n" line endings. Values are printed
// with 17 significant digits so doubles survive a parse round trip.
// When col_names is non-empty a header row is emitted (with a leading
// empty cell if row_names is also non-empty); when row_names is non-empty
// each row starts with its name. Name vectors, when given, must match the
// matrix dimensions.
void write_csv_matrix(const Matrix& m,
                      const std::vector<std::string>& row_names,
                      const std::vector<std::string>& col_names,
                      const std::string& path);

struct CsvMatrix {
  Matrix values;
  std::vector<std::string> row_names;  // empty if absent
  std::vector<std::string> col_names;  // empty if absent
};

// Parses a CSV written by write_csv_matrix. Header and row-name presence
// are auto-detected (non-numeric first row / first column). Quoting is not
// supported; names must not contain commas.
CsvMatrix read_csv_matrix(const std::string& path);

}  // namespace gaborfeat
