// core/src/labels.cpp

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

#include "gaborfeat/labels.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gaborfeat {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool parse_long(const std::string& tok, long* out) {
  try {
    size_t pos = 0;
    *out = std::stol(tok, &pos);
    return pos == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

LabelTrack parse_labels(const std::string& text) {
  LabelTrack track;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b, phone, extra;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b >> phone))
      throw std::runtime_error("labels line " + std::to_string(line_no) +
                               ": expected <start> <end> <phoneme>");
    if (ls >> extra)
      throw std::runtime_error("labels line " + std::to_string(line_no) +
                               ": trailing field '" + extra + "'");
    LabelSegment seg;
    if (!parse_long(a, &seg.start_frame) || !parse_long(b, &seg.end_frame))
      throw std::runtime_error("labels line " + std::to_string(line_no) +
                               ": non-numeric frame index");
    if (seg.start_frame < 0)
      throw std::runtime_error("labels line " + std::to_string(line_no) +
                               ": negative start frame");
    if (seg.end_frame <= seg.start_frame)
      throw std::runtime_error("labels line " + std::to_string(line_no) +
                               ": empty or inverted segment");
    seg.phoneme = phone;
    track.segments.push_back(std::move(seg));
  }
  std::stable_sort(track.segments.begin(), track.segments.end(),
                   [](const LabelSegment& x, const LabelSegment& y) {
                     return x.start_frame < y.start_frame;
                   });
  for (size_t i = 1; i < track.segments.size(); ++i) {
    if (track.segments[i - 1].end_frame > track.segments[i].start_frame)
      throw std::runtime_error(
          "overlapping label segments at frame " +
          std::to_string(track.segments[i].start_frame));
  }
  return track;
}

LabelTrack read_labels(const std::string& path) {
  return parse_labels(read_file(path));
}

std::vector<std::string> read_phoneme_list(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> phones;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(first, last - first + 1);
    if (tok.empty() || tok[0] == '#') continue;
    phones.push_back(std::move(tok));
  }
  return phones;
}

}  // namespace gaborfeat
