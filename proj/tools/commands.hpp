// tools/commands.hpp

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

#include <cstdint>
#include <string>
#include <vector>

namespace gaborfeat::cli {

// Options shared by the feature-writing subcommands.
struct OutputOptions {
  std::vector<std::string> inputs;
  std::string output;         // file for one input, directory for many
  std::string format;         // "", "htk" or "csv"; "" = by extension
  unsigned jobs = 0;          // 0 = hardware concurrency
  double energy_floor = 1e-10;
};

struct MelspecOptions : OutputOptions {};

struct GbfbOptions : OutputOptions {
  std::string subgroup = "full";
  std::string conv = "direct";  // "direct" or "fft"
};

struct CombineOptions : OutputOptions {
  std::string parts;  // e.g. "htm,zeros:202"
  std::uint64_t seed = 42;
  std::string conv = "direct";
};

struct SimilarityOptions {
  std::string features;
  std::string labels;
  std::string phones;
  double threshold_deg = 45.0;
  std::string out;
  std::string order_out;  // optional permutation listing
};

struct FilterDumpOptions {
  std::string subgroup = "full";
  std::string out_dir;
};

int run_melspec(const MelspecOptions& opt);
int run_gbfb(const GbfbOptions& opt);
int run_combine(const CombineOptions& opt);
int run_similarity(const SimilarityOptions& opt);
int run_filter_dump(const FilterDumpOptions& opt);
int run_info();

}  // namespace gaborfeat::cli
