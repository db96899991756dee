// core/include/gaborfeat/labels.hpp

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

namespace gaborfeat {

// One frame-indexed phoneme segment: [start_frame, end_frame).
struct LabelSegment {
  long start_frame = 0;
  long end_frame = 0;  // exclusive
  std::string phoneme;
};

// Frame-synchronous phoneme labels for one utterance. Segments are kept
// sorted by start frame and may not overlap or be empty.
struct LabelTrack {
  std::vector<LabelSegment> segments;
};

// Parses a label file with one segment per line:
//   <start_frame> <end_frame_exclusive> <ARPABET>
// Blank lines are skipped. Segments are sorted; empty, inverted or
// overlapping segments raise std::runtime_error.
LabelTrack read_labels(const std::string& path);

// Same parser over an in-memory string (used by tests and stdin paths).
LabelTrack parse_labels(const std::string& text);

// Reads a phoneme list file, one ARPABET symbol per line; blank lines and
// lines starting with '#' are skipped.
std::vector<std::string> read_phoneme_list(const std::string& path);

}  // namespace gaborfeat
