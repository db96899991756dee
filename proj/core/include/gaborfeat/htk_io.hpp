// core/include/gaborfeat/htk_io.hpp

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

#include "gaborfeat/features.hpp"

namespace gaborfeat {

// HTK parameter file layout: big-endian header
//   int32 nSamples, int32 sampPeriod (100 ns units),
//   int16 sampSize (= 4*D), int16 parmKind (= 9, USER)
// followed by row-major big-endian 32-bit floats. Values are stored at
// float precision; a write/read round trip reproduces them bit-exactly.
inline constexpr int kHtkParmKindUser = 9;
inline constexpr int kHtkMaxDims = 8191;  // 4*D must fit in int16 sampSize

void write_htk(const FeatureMatrix& m, const std::string& path);

// Reads a parameter file written by write_htk (or any float-valued HTK
// file with sampSize a multiple of 4). Provenance is filled with
// placeholders. Throws std::runtime_error on malformed or truncated files.
FeatureMatrix read_htk(const std::string& path);

}  // namespace gaborfeat
