// core/include/gaborfeat/features.hpp

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

// frames x D feature values plus per-dimension provenance (which filter
// and which channel, or which synthetic part, a dimension came from).
struct FeatureMatrix {
  Matrix values;  // frames x D
  double frame_shift_s = 0.010;
  std::vector<std::string> dim_provenance;  // length D

  int frames() const { return values.rows(); }
  int dims() const { return values.cols(); }
};

// Placeholder provenance ("dim0", "dim1", ...) for matrices loaded from
// formats that do not carry it.
std::vector<std::string> default_provenance(int dims);

}  // namespace gaborfeat
