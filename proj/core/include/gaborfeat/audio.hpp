// core/include/gaborfeat/audio.hpp

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

// Mono PCM audio, samples normalized to [-1, 1].
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate_hz = 0;
};

// Reads a RIFF/WAVE file. Only uncompressed 16-bit mono PCM is accepted;
// anything else (compressed, multichannel, other bit depths) is an error
// rather than a silent conversion. Samples are scaled by 1/32768.
// Throws std::runtime_error on malformed or unsupported files.
AudioSignal read_wav(const std::string& path);

}  // namespace gaborfeat
