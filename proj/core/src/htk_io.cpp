// core/src/htk_io.cpp

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

#include "gaborfeat/htk_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace gaborfeat {

namespace {

void put_be32(std::vector<uint8_t>& buf, uint32_t v) {
  buf.push_back(static_cast<uint8_t>(v >> 24));
  buf.push_back(static_cast<uint8_t>(v >> 16));
  buf.push_back(static_cast<uint8_t>(v >> 8));
  buf.push_back(static_cast<uint8_t>(v));
}

void put_be16(std::vector<uint8_t>& buf, uint16_t v) {
  buf.push_back(static_cast<uint8_t>(v >> 8));
  buf.push_back(static_cast<uint8_t>(v));
}

uint32_t get_be32(const uint8_t* p) {
  return (static_cast<uint32_t>(p[0]) << 24) |
         (static_cast<uint32_t>(p[1]) << 16) |
         (static_cast<uint32_t>(p[2]) << 8) | static_cast<uint32_t>(p[3]);
}

uint16_t get_be16(const uint8_t* p) {
  return static_cast<uint16_t>((p[0] << 8) | p[1]);
}

}  // namespace

void write_htk(const FeatureMatrix& m, const std::string& path) {
  const int frames = m.frames();
  const int dims = m.dims();
  if (dims > kHtkMaxDims)
    throw std::invalid_argument("write_htk: " + std::to_string(dims) +
                                " dimensions exceed the HTK sampSize limit (" +
                                std::to_string(kHtkMaxDims) + ")");
  const long long period = std::llround(m.frame_shift_s * 1e7);
  if (period <= 0 || period > INT32_MAX)
    throw std::invalid_argument("write_htk: frame shift out of range");

  std::vector<uint8_t> buf;
  buf.reserve(12 + static_cast<size_t>(frames) * dims * 4);
  put_be32(buf, static_cast<uint32_t>(frames));
  put_be32(buf, static_cast<uint32_t>(period));
  put_be16(buf, static_cast<uint16_t>(4 * dims));
  put_be16(buf, static_cast<uint16_t>(kHtkParmKindUser));
  for (int r = 0; r < frames; ++r) {
    for (int c = 0; c < dims; ++c) {
      const double v = m.values(r, c);
      if (!std::isfinite(v))
        throw std::invalid_argument("write_htk: non-finite value at frame " +
                                    std::to_string(r) + ", dim " +
                                    std::to_string(c));
      put_be32(buf, std::bit_cast<uint32_t>(static_cast<float>(v)));
    }
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error(path + ": write failed");
}

FeatureMatrix read_htk(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (bytes.size() < 12)
    throw std::runtime_error(path + ": malformed HTK header");
  const uint32_t frames = get_be32(bytes.data());
  const uint32_t period = get_be32(bytes.data() + 4);
  const uint16_t samp_size = get_be16(bytes.data() + 8);
  if (samp_size == 0 || samp_size % 4 != 0)
    throw std::runtime_error(path + ": unsupported HTK sample size " +
                             std::to_string(samp_size));
  const int dims = samp_size / 4;
  const size_t need = 12 + static_cast<size_t>(frames) * samp_size;
  if (bytes.size() < need)
    throw std::runtime_error(path + ": truncated HTK data");

  FeatureMatrix m;
  m.values = Matrix(static_cast<int>(frames), dims);
  m.frame_shift_s = static_cast<double>(period) * 1e-7;
  m.dim_provenance = default_provenance(dims);
  const uint8_t* p = bytes.data() + 12;
  for (uint32_t r = 0; r < frames; ++r)
    for (int c = 0; c < dims; ++c, p += 4)
      m.values(static_cast<int>(r), c) =
          static_cast<double>(std::bit_cast<float>(get_be32(p)));
  return m;
}

std::vector<std::string> default_provenance(int dims) {
  std::vector<std::string> prov;
  prov.reserve(dims);
  for (int i = 0; i < dims; ++i) prov.push_back("dim" + std::to_string(i));
  return prov;
}

}  // namespace gaborfeat
