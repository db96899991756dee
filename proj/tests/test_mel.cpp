// tests/test_mel.cpp

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

#include <cmath>

#include "doctest.h"
#include "gaborfeat/mel.hpp"
#include "test_util.hpp"

using namespace gaborfeat;

namespace {

AudioSignal tone(double freq_hz, double amplitude, int n, int rate) {
  AudioSignal sig;
  sig.sample_rate_hz = rate;
  sig.samples.resize(n);
  for (int i = 0; i < n; ++i)
    sig.samples[i] = amplitude * std::sin(2.0 * M_PI * freq_hz * i / rate);
  return sig;
}

}  // namespace

TEST_CASE("mel scale formula and inverse") {
  CHECK(mel_scale(0.0) == 0.0);
  CHECK(mel_scale(1000.0) == doctest::Approx(999.9855371396).epsilon(1e-10));
  CHECK(std::abs(mel_scale(1000.0) - 999.99) < 0.01);
  for (double f : {64.0, 440.0, 8000.0})
    CHECK(mel_inverse(mel_scale(f)) == doctest::Approx(f).epsilon(1e-9));
  CHECK_THROWS_AS(mel_scale(-1.0), std::invalid_argument);
}

TEST_CASE("frame count follows the closed form") {
  const MelConfig cfg;

  SUBCASE("one second gives 98 frames") {
    const auto spec = log_mel_spectrogram(tone(440.0, 0.3, 16000, 16000), cfg);
    CHECK(spec.values.rows() == 98);
    CHECK(spec.values.cols() == 31);
  }

  SUBCASE("all lengths from one frame up") {
    for (int n : {400, 401, 559, 560, 561, 720, 1600, 4000}) {
      const auto spec =
          log_mel_spectrogram(tone(440.0, 0.3, n, 16000), cfg);
      CHECK(spec.values.rows() == (n - 400) / 160 + 1);
    }
  }

  SUBCASE("shorter than one frame is an error") {
    CHECK_THROWS_AS(log_mel_spectrogram(tone(440.0, 0.3, 399, 16000), cfg),
                    std::invalid_argument);
  }

  SUBCASE("wrong sample rate is an error") {
    CHECK_THROWS_AS(log_mel_spectrogram(tone(440.0, 0.3, 8000, 8000), cfg),
                    std::invalid_argument);
  }
}

TEST_CASE("zero signal hits the energy floor everywhere") {
  MelConfig cfg;
  AudioSignal silence;
  silence.sample_rate_hz = 16000;
  silence.samples.assign(16000, 0.0);
  const auto spec = log_mel_spectrogram(silence, cfg);
  const double expected = std::log(cfg.energy_floor);
  for (int t = 0; t < spec.values.rows(); ++t)
    for (int c = 0; c < spec.values.cols(); ++c)
      CHECK(spec.values(t, c) == doctest::Approx(expected));
}

TEST_CASE("channel geometry") {
  const MelConfig cfg;

  SUBCASE("centers strictly increasing") {
    const auto centers = channel_centers_hz(cfg);
    REQUIRE(centers.size() == 31);
    for (size_t i = 1; i < centers.size(); ++i)
      CHECK(centers[i] > centers[i - 1]);
  }

  SUBCASE("channel nearest 1 kHz is index 10") {
    CHECK(center_channel_1khz(cfg) == 10);
    const auto centers = channel_centers_hz(cfg);
    CHECK(centers[10] == doctest::Approx(1062.949).epsilon(1e-4));
  }

  SUBCASE("single channel spanning the range gives index 0") {
    MelConfig one = cfg;
    one.n_channels = 1;
    CHECK(center_channel_1khz(one) == 0);
  }

  SUBCASE("equidistant centers pick the lower index") {
    // Two channels whose centers sit symmetrically around 1 kHz.
    MelConfig two = cfg;
    two.n_channels = 2;
    const double m900 = mel_scale(900.0), m1100 = mel_scale(1100.0);
    const double step = m1100 - m900;
    two.f_low_hz = mel_inverse(m900 - step);
    two.f_high_hz = mel_inverse(m1100 + step);
    const auto centers = channel_centers_hz(two);
    REQUIRE(centers[0] == doctest::Approx(900.0).epsilon(1e-9));
    REQUIRE(centers[1] == doctest::Approx(1100.0).epsilon(1e-9));
    CHECK(center_channel_1khz(two) == 0);
  }

  SUBCASE("every FFT bin strictly inside the range has positive weight") {
    const Matrix w = mel_filter_weights(cfg);
    const int n_bins = cfg.fft_size / 2 + 1;
    for (int b = 0; b < n_bins; ++b) {
      const double f = static_cast<double>(b) * cfg.sample_rate_hz /
                       cfg.fft_size;
      if (f <= cfg.f_low_hz || f >= cfg.f_high_hz) continue;
      double total = 0.0;
      for (int ch = 0; ch < cfg.n_channels; ++ch) total += w(ch, b);
      CHECK(total > 0.0);
    }
  }
}

TEST_CASE("a pure 1 kHz tone peaks in the channel nearest 1 kHz") {
  const MelConfig cfg;
  const auto spec = log_mel_spectrogram(tone(1000.0, 0.5, 16000, 16000), cfg);
  std::vector<double> mean(cfg.n_channels, 0.0);
  for (int t = 0; t < spec.values.rows(); ++t)
    for (int c = 0; c < cfg.n_channels; ++c) mean[c] += spec.values(t, c);
  int argmax = 0;
  for (int c = 1; c < cfg.n_channels; ++c)
    if (mean[c] > mean[argmax]) argmax = c;
  CHECK(argmax == center_channel_1khz(cfg));
}

TEST_CASE("doubling the amplitude shifts log energies by ln 4") {
  const MelConfig cfg;
  const AudioSignal once = tone(700.0, 0.2, 8000, 16000);
  AudioSignal twice = once;
  for (double& s : twice.samples) s *= 2.0;
  const auto a = log_mel_spectrogram(once, cfg);
  const auto b = log_mel_spectrogram(twice, cfg);
  const double floor_log = std::log(cfg.energy_floor);
  int checked = 0;
  for (int t = 0; t < a.values.rows(); ++t)
    for (int c = 0; c < a.values.cols(); ++c) {
      // Only where neither run was floored.
      if (a.values(t, c) > floor_log + 2.0 &&
          b.values(t, c) > floor_log + 2.0) {
        CHECK(b.values(t, c) - a.values(t, c) ==
              doctest::Approx(std::log(4.0)).epsilon(1e-9));
        ++checked;
      }
    }
  CHECK(checked > 0);
}
