// tests/test_util.hpp

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

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "gaborfeat/matrix.hpp"
#include "gaborfeat/mel.hpp"

namespace testutil {

// Scratch directory removed when the object goes out of scope.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    namespace fs = std::filesystem;
    path_ = fs::temp_directory_path() /
            ("gaborfeat_test_" + tag + "_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

// Minimal independent PCM16 mono WAV writer (little-endian by hand).
inline void write_wav_pcm16(const std::string& path,
                            const std::vector<int16_t>& samples,
                            uint32_t sample_rate) {
  std::vector<uint8_t> bytes;
  auto le16 = [&](uint16_t v) {
    bytes.push_back(v & 0xff);
    bytes.push_back(v >> 8);
  };
  auto le32 = [&](uint32_t v) {
    bytes.push_back(v & 0xff);
    bytes.push_back((v >> 8) & 0xff);
    bytes.push_back((v >> 16) & 0xff);
    bytes.push_back((v >> 24) & 0xff);
  };
  auto tag = [&](const char* t) {
    for (int i = 0; i < 4; ++i) bytes.push_back(t[i]);
  };
  const uint32_t data_size = 2 * static_cast<uint32_t>(samples.size());
  tag("RIFF");
  le32(36 + data_size);
  tag("WAVE");
  tag("fmt ");
  le32(16);
  le16(1);  // PCM
  le16(1);  // mono
  le32(sample_rate);
  le32(sample_rate * 2);
  le16(2);
  le16(16);
  tag("data");
  le32(data_size);
  for (int16_t s : samples) le16(static_cast<uint16_t>(s));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

inline std::vector<int16_t> sine_pcm16(double freq_hz, double amplitude,
                                       int n, int rate) {
  std::vector<int16_t> samples(n);
  for (int i = 0; i < n; ++i)
    samples[i] = static_cast<int16_t>(
        std::lround(amplitude * 32767.0 * std::sin(2.0 * M_PI * freq_hz * i /
                                                   rate)));
  return samples;
}

inline gaborfeat::Matrix random_matrix(int rows, int cols, uint64_t seed,
                                       double lo = -1.0, double hi = 1.0) {
  std::mt19937_64 gen(seed);
  gaborfeat::Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      m(r, c) = lo + (hi - lo) * u;
    }
  return m;
}

inline gaborfeat::LogMelSpectrogram spectrogram_from(
    const gaborfeat::Matrix& values) {
  gaborfeat::LogMelSpectrogram spec;
  spec.values = values;
  spec.frame_shift_s = 0.010;
  for (int c = 0; c < values.cols(); ++c)
    spec.channel_center_hz.push_back(100.0 * (c + 1));
  return spec;
}

// Naive magnitude of a kernel's 2D discrete-time Fourier transform at one
// frequency pair, written independently of the library implementation.
inline double naive_dtft_mag(const gaborfeat::Matrix& kernel, double u,
                             double v) {
  const int w_k = kernel.rows(), w_n = kernel.cols();
  const int hn = (w_n - 1) / 2, hk = (w_k - 1) / 2;
  std::complex<double> acc(0.0, 0.0);
  for (int k = 0; k < w_k; ++k)
    for (int n = 0; n < w_n; ++n) {
      const double phase = -(u * (n - hn) + v * (k - hk));
      acc += kernel(k, n) *
             std::complex<double>(std::cos(phase), std::sin(phase));
    }
  return std::abs(acc);
}

// Brute-force reference for convolve2d: replicate-edge padding in time,
// zeros across channels, centered correlation, and the same positional DC
// compensation for kernels with negative entries, all as plain loops.
inline gaborfeat::Matrix oracle_convolve(const gaborfeat::Matrix& spec,
                                         const gaborfeat::Matrix& kernel) {
  const int frames = spec.rows(), chans = spec.cols();
  const int w_k = kernel.rows(), w_n = kernel.cols();
  const int hn = (w_n - 1) / 2, hk = (w_k - 1) / 2;

  auto padded_at = [&](int t, int c) -> double {
    if (c < 0 || c >= chans) return 0.0;
    return spec(std::clamp(t, 0, frames - 1), c);
  };
  auto inside = [&](int c) -> double { return (c >= 0 && c < chans) ? 1 : 0; };

  double min_coef = 0.0, l1 = 0.0;
  for (int k = 0; k < w_k; ++k)
    for (int n = 0; n < w_n; ++n) {
      min_coef = std::min(min_coef, kernel(k, n));
      l1 += std::abs(kernel(k, n));
    }

  gaborfeat::Matrix out(frames, chans);
  for (int t = 0; t < frames; ++t) {
    for (int c = 0; c < chans; ++c) {
      double raw = 0.0, smooth = 0.0, dc_gain = 0.0, env_mass = 0.0;
      for (int k = 0; k < w_k; ++k) {
        for (int n = 0; n < w_n; ++n) {
          const int tt = t + n - hn;
          const int cc = c + k - hk;
          raw += kernel(k, n) * padded_at(tt, cc);
          const double e = std::abs(kernel(k, n)) / l1;
          smooth += e * padded_at(tt, cc);
          dc_gain += kernel(k, n) * inside(cc);
          env_mass += e * inside(cc);
        }
      }
      out(t, c) =
          min_coef >= 0.0 ? raw : raw - dc_gain * (smooth / env_mass);
    }
  }
  return out;
}

}  // namespace testutil
