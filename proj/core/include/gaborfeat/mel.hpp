// core/include/gaborfeat/mel.hpp

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

#include <vector>

#include "gaborfeat/audio.hpp"
#include "gaborfeat/matrix.hpp"

namespace gaborfeat {

// Log-Mel front end configuration. Defaults give the 31-channel
// 64-8000 Hz layout at 16 kHz with 25 ms frames and 10 ms shift.
struct MelConfig {
  int sample_rate_hz = 16000;
  int n_channels = 31;
  double frame_length_s = 0.025;
  double frame_shift_s = 0.010;
  double preemphasis = 0.97;
  int fft_size = 512;
  double f_low_hz = 64.0;
  double f_high_hz = 8000.0;
  double energy_floor = 1e-10;

  int frame_length_samples() const;
  int frame_shift_samples() const;
  // Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

struct LogMelSpectrogram {
  Matrix values;  // frames x n_channels, natural-log band energies
  double frame_shift_s = 0.010;
  std::vector<double> channel_center_hz;  // strictly increasing
};

// Mel(x) = 2595 log10(1 + x/700); rejects negative frequencies.
double mel_scale(double f_hz);
// Inverse: 700 (10^(m/2595) - 1).
double mel_inverse(double mel);

// Center frequency (Hz) of each of the n_channels triangular filters,
// uniformly spaced on the mel axis between f_low_hz and f_high_hz.
std::vector<double> channel_centers_hz(const MelConfig& cfg);

// Index of the channel whose center is nearest 1 kHz; ties go to the
// lower index.
int center_channel_1khz(const MelConfig& cfg);

// Triangular filter weights, n_channels x (fft_size/2 + 1). Triangles are
// half-overlapping and uniform on the mel axis; weights apply to the
// power spectrum.
Matrix mel_filter_weights(const MelConfig& cfg);

// frames = floor((N - frame_length)/shift) + 1; per frame: pre-emphasis
// y[n] = x[n] - preemphasis*x[n-1], Hamming window, power spectrum,
// triangular mel integration, floor at energy_floor, natural log.
// Errors when the sample rate mismatches the config or the signal is
// shorter than one frame.
LogMelSpectrogram log_mel_spectrogram(const AudioSignal& sig,
                                      const MelConfig& cfg);

}  // namespace gaborfeat
