// core/src/mel.cpp

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

#include "gaborfeat/mel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gaborfeat/fft.hpp"

namespace gaborfeat {

int MelConfig::frame_length_samples() const {
  return static_cast<int>(std::lround(frame_length_s * sample_rate_hz));
}

int MelConfig::frame_shift_samples() const {
  return static_cast<int>(std::lround(frame_shift_s * sample_rate_hz));
}

void MelConfig::validate() const {
  if (sample_rate_hz <= 0)
    throw std::invalid_argument("mel config: sample rate must be positive");
  if (n_channels < 1)
    throw std::invalid_argument("mel config: need at least one channel");
  if (!(f_low_hz >= 0.0) || !(f_low_hz < f_high_hz) ||
      !(f_high_hz <= sample_rate_hz / 2.0))
    throw std::invalid_argument(
        "mel config: need 0 <= f_low < f_high <= sample_rate/2");
  if (frame_length_samples() < 1 || frame_shift_samples() < 1)
    throw std::invalid_argument("mel config: frame length/shift too small");
  if (fft_size < frame_length_samples())
    throw std::invalid_argument(
        "mel config: fft_size smaller than the frame length");
  if (!(energy_floor > 0.0))
    throw std::invalid_argument("mel config: energy floor must be positive");
}

double mel_scale(double f_hz) {
  if (f_hz < 0.0)
    throw std::invalid_argument("mel_scale: negative frequency");
  return 2595.0 * std::log10(1.0 + f_hz / 700.0);
}

double mel_inverse(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::vector<double> channel_centers_hz(const MelConfig& cfg) {
  cfg.validate();
  const double m_lo = mel_scale(cfg.f_low_hz);
  const double m_hi = mel_scale(cfg.f_high_hz);
  const double step = (m_hi - m_lo) / (cfg.n_channels + 1);
  std::vector<double> centers(cfg.n_channels);
  for (int i = 0; i < cfg.n_channels; ++i)
    centers[i] = mel_inverse(m_lo + (i + 1) * step);
  return centers;
}

int center_channel_1khz(const MelConfig& cfg) {
  const auto centers = channel_centers_hz(cfg);
  int best = 0;
  double best_dist = std::abs(centers[0] - 1000.0);
  for (int i = 1; i < static_cast<int>(centers.size()); ++i) {
    const double d = std::abs(centers[i] - 1000.0);
    if (d < best_dist) {  // strict: ties keep the lower index
      best_dist = d;
      best = i;
    }
  }
  return best;
}

Matrix mel_filter_weights(const MelConfig& cfg) {
  cfg.validate();
  const int n_bins = cfg.fft_size / 2 + 1;
  const double m_lo = mel_scale(cfg.f_low_hz);
  const double m_hi = mel_scale(cfg.f_high_hz);
  const double step = (m_hi - m_lo) / (cfg.n_channels + 1);

  Matrix weights(cfg.n_channels, n_bins);
  for (int b = 0; b < n_bins; ++b) {
    const double f = static_cast<double>(b) * cfg.sample_rate_hz /
                     cfg.fft_size;
    if (f < cfg.f_low_hz || f > cfg.f_high_hz) continue;
    const double m = mel_scale(f);
    for (int ch = 0; ch < cfg.n_channels; ++ch) {
      const double left = m_lo + ch * step;
      const double peak = left + step;
      const double right = peak + step;
      double w = 0.0;
      if (m > left && m <= peak)
        w = (m - left) / step;
      else if (m > peak && m < right)
        w = (right - m) / step;
      weights(ch, b) = w;
    }
  }
  return weights;
}

LogMelSpectrogram log_mel_spectrogram(const AudioSignal& sig,
                                      const MelConfig& cfg) {
  cfg.validate();
  if (sig.sample_rate_hz != cfg.sample_rate_hz)
    throw std::invalid_argument(
        "log_mel_spectrogram: sample rate " +
        std::to_string(sig.sample_rate_hz) + " does not match configured " +
        std::to_string(cfg.sample_rate_hz));
  const int frame_len = cfg.frame_length_samples();
  const int shift = cfg.frame_shift_samples();
  const long n = static_cast<long>(sig.samples.size());
  if (n < frame_len)
    throw std::invalid_argument(
        "log_mel_spectrogram: signal shorter than one frame");

  const int frames = static_cast<int>((n - frame_len) / shift) + 1;

  // Pre-emphasis over the whole signal; the first sample uses itself as
  // predecessor.
  std::vector<double> emphasized(sig.samples.size());
  emphasized[0] = sig.samples[0] * (1.0 - cfg.preemphasis);
  for (size_t i = 1; i < sig.samples.size(); ++i)
    emphasized[i] = sig.samples[i] - cfg.preemphasis * sig.samples[i - 1];

  std::vector<double> hamming(frame_len);
  for (int i = 0; i < frame_len; ++i)
    hamming[i] = 0.54 - 0.46 * std::cos(2.0 * M_PI * i / (frame_len - 1));

  const Matrix weights = mel_filter_weights(cfg);
  const int n_bins = cfg.fft_size / 2 + 1;
  RealFft1d fft(cfg.fft_size);
  std::vector<double> frame(cfg.fft_size, 0.0);
  std::vector<std::complex<double>> spectrum(n_bins);
  std::vector<double> power(n_bins);

  LogMelSpectrogram out;
  out.values = Matrix(frames, cfg.n_channels);
  out.frame_shift_s = cfg.frame_shift_s;
  out.channel_center_hz = channel_centers_hz(cfg);

  for (int t = 0; t < frames; ++t) {
    const double* src = emphasized.data() + static_cast<size_t>(t) * shift;
    for (int i = 0; i < frame_len; ++i) frame[i] = src[i] * hamming[i];
    std::fill(frame.begin() + frame_len, frame.end(), 0.0);
    fft.forward(frame.data(), spectrum.data());
    for (int b = 0; b < n_bins; ++b) power[b] = std::norm(spectrum[b]);
    for (int ch = 0; ch < cfg.n_channels; ++ch) {
      double energy = 0.0;
      const double* w = weights.row(ch);
      for (int b = 0; b < n_bins; ++b) energy += w[b] * power[b];
      out.values(t, ch) = std::log(std::max(energy, cfg.energy_floor));
    }
  }
  return out;
}

}  // namespace gaborfeat
