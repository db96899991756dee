// core/src/audio.cpp

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

#include "gaborfeat/audio.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace gaborfeat {

namespace {

uint32_t le32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t le16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

}  // namespace

AudioSignal read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (bytes.size() < 12) fail(path, "malformed WAV header (file too small)");
  if (std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    fail(path, "malformed WAV header (not a RIFF/WAVE file)");

  bool have_fmt = false;
  uint16_t format_tag = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  const uint8_t* data_ptr = nullptr;
  size_t data_size = 0;

  size_t off = 12;
  while (off + 8 <= bytes.size()) {
    const uint8_t* chunk = bytes.data() + off;
    const uint32_t chunk_size = le32(chunk + 4);
    const size_t body = off + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_size < 16 || body + 16 > bytes.size())
        fail(path, "malformed fmt chunk");
      format_tag = le16(chunk + 8);
      channels = le16(chunk + 10);
      sample_rate = le32(chunk + 12);
      bits = le16(chunk + 22);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (body + chunk_size > bytes.size())
        fail(path, "truncated data chunk");
      data_ptr = bytes.data() + body;
      data_size = chunk_size;
    }
    // Chunks are word aligned; odd sizes carry a pad byte.
    off = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt) fail(path, "missing fmt chunk");
  if (data_ptr == nullptr) fail(path, "missing data chunk");
  if (format_tag != 1)
    fail(path, "unsupported encoding (only uncompressed PCM is supported)");
  if (channels != 1)
    fail(path, "unsupported encoding (only mono files are supported)");
  if (bits != 16)
    fail(path, "unsupported encoding (only 16-bit samples are supported)");
  if (sample_rate == 0) fail(path, "malformed fmt chunk (zero sample rate)");
  if (data_size % 2 != 0) fail(path, "truncated data chunk (odd byte count)");

  AudioSignal sig;
  sig.sample_rate_hz = static_cast<int>(sample_rate);
  sig.samples.resize(data_size / 2);
  for (size_t i = 0; i < sig.samples.size(); ++i) {
    const int16_t v = static_cast<int16_t>(le16(data_ptr + 2 * i));
    sig.samples[i] = static_cast<double>(v) / 32768.0;
  }
  return sig;
}

}  // namespace gaborfeat
