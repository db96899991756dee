// core/include/gaborfeat/gabor.hpp

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

#include "gaborfeat/matrix.hpp"
#include "gaborfeat/mel.hpp"

namespace gaborfeat {

// Gabor filterbank configuration.
//
// Temporal modulation frequencies are in Hz, spectral ones in
// cycles/channel; both sets start at 0 and are strictly increasing.
// Filter supports follow W = round_to_odd(oscillations / f) per axis,
// capped at max_time_frames / max_freq_channels (zero modulation uses the
// cap), so every filter holds a fixed number of carrier oscillations
// under its envelope (constant-Q).
struct GfbConfig {
  std::vector<double> temporal_mods_hz = {0.0, 2.4, 3.9, 6.2, 9.9, 15.7, 25.0};
  std::vector<double> spectral_mods_cpc = {0.0, 0.128, 0.16, 0.2, 0.25};
  double oscillations = 3.5;  // carrier half-period count under the envelope
  int max_time_frames = 99;
  int max_freq_channels = 69;
  double frame_shift_s = 0.010;
  int n_mel_channels = 31;
  int center_channel = 10;  // anchor for critical sampling (1 kHz channel)

  // Default bank with the critical-sampling anchor derived from the mel
  // layout instead of the hard-coded default.
  static GfbConfig defaults(const MelConfig& mel = MelConfig{});
  void validate() const;
};

// Spectral modulation set generator: walks down from max_cpc with the
// constant-overlap ratio (1-overlap)/(1+overlap) for `count` nonzero
// values and prepends 0. The default spectral set is
// spectral_modulation_set(0.25, 1.0/9.0, 4).
std::vector<double> spectral_modulation_set(double max_cpc, double overlap,
                                            int count);

// One (temporal, spectral, orientation) grid point with its realized
// support sizes. orientation is the sign applied to the spectral carrier
// frequency; it is always +1 for separable filters (f_n == 0 or
// f_k == 0).
struct FilterParams {
  double f_n_hz = 0.0;
  double f_k_cpc = 0.0;
  int orientation = +1;
  int w_n = 0;  // temporal support (frames, odd)
  int w_k = 0;  // spectral support (channels, odd)
  int n0 = 0;   // center frame index within the support
  int k0 = 0;   // center channel index within the support
};

struct GaborFilter {
  FilterParams params;
  Matrix kernel;  // w_k x w_n, rows = spectral axis
};

enum class Subgroup { Full, Ltm, Mtm, Htm, Dc };

const char* subgroup_name(Subgroup g);
// Parses "full|ltm|mtm|htm|dc"; throws std::invalid_argument listing the
// valid names otherwise.
Subgroup parse_subgroup(const std::string& name);

// Built filterbank: filters in deterministic grid order plus, per filter,
// the channel indices kept by critical sampling.
struct FilterbankSpec {
  GfbConfig config;
  Subgroup subgroup = Subgroup::Full;
  std::vector<GaborFilter> filters;
  std::vector<std::vector<int>> sampling;  // per filter, ascending

  int feature_dims() const;
};

// Odd support length for a modulation of f cycles per sample unit:
// round_to_odd(min(nu/f, cap)); f == 0 uses the cap. cap must be odd.
int support_length(double f_cycles, double nu, int cap);

// Enumerates the modulation grid: spectral-major, temporal ascending
// within, +1 orientation first, with an extra -1 entry for every pair
// with both modulations nonzero. The default grid has 59 entries.
std::vector<FilterParams> modulation_grid(const GfbConfig& cfg);

// Keeps the grid entries belonging to a subgroup: Full passes all, Dc
// keeps f_n == 0, and Ltm/Mtm/Htm keep the temporal pairs
// {2.4, 3.9} / {6.2, 9.9} / {15.7, 25} Hz. Throws if a required
// frequency is missing from the grid.
std::vector<FilterParams> select_subgroup(
    const std::vector<FilterParams>& grid, Subgroup subgroup);

// Builds one kernel: cosine carrier times the separable Hann envelope
// (peak at the support center, nonzero at the edges), then removal of the
// kernel mean by envelope subtraction (skipped for the pure DC filter),
// then scaling to unit peak magnitude frequency response.
GaborFilter build_gabor_filter(const FilterParams& p, const GfbConfig& cfg);

// Channel indices kept by critical sampling for one filter: purely
// temporal filters keep only the anchor channel; filters at the bank's
// smallest spectral extent keep every channel; all others keep the anchor
// plus shifts by round(w_k/4) within [0, n_mel_channels).
std::vector<int> critical_channels(const FilterParams& p,
                                   const GfbConfig& cfg);

FilterbankSpec build_filterbank(const GfbConfig& cfg,
                                Subgroup subgroup = Subgroup::Full);

// Largest magnitude of the kernel's 2D discrete-time Fourier transform,
// located by a dense grid scan plus local refinement. Used for the
// unit-peak normalization.
double peak_frequency_response(const Matrix& kernel);

}  // namespace gaborfeat
