// core/src/gabor.cpp

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

#include "gaborfeat/gabor.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gaborfeat {

namespace {

constexpr double kLtmPair[2] = {2.4, 3.9};
constexpr double kMtmPair[2] = {6.2, 9.9};
constexpr double kHtmPair[2] = {15.7, 25.0};
constexpr double kFreqTol = 1e-9;

// Hann envelope over an odd support, maximum 1 at the center, nonzero at
// the edges (the zero endpoints of the usual window fall just outside the
// support).
std::vector<double> hann_envelope(int w) {
  std::vector<double> env(w);
  const int half = (w - 1) / 2;
  for (int i = 0; i < w; ++i)
    env[i] = 0.5 * (1.0 + std::cos(2.0 * M_PI * (i - half) / (w + 1)));
  return env;
}

// H(u, v) of a kernel made of up to three separable terms
// sum_j col_j (outer) row_j, evaluated as products of 1D transforms.
struct SeparableKernel {
  // term index: 0 = cos carrier, 1 = sin carrier, 2 = envelope (scaled
  // by -alpha). Unused terms have empty vectors.
  std::vector<double> rows[3];  // along the temporal axis (length w_n)
  std::vector<double> cols[3];  // along the spectral axis (length w_k)
  double sign[3] = {1.0, -1.0, -1.0};

  static std::complex<double> dtft(const std::vector<double>& x, double w) {
    const int half = (static_cast<int>(x.size()) - 1) / 2;
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
      const double phase = -w * (i - half);
      acc += x[i] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc;
  }

  double magnitude_sq(double u, double v) const {
    std::complex<double> h(0.0, 0.0);
    for (int j = 0; j < 3; ++j) {
      if (rows[j].empty()) continue;
      h += sign[j] * dtft(rows[j], u) * dtft(cols[j], v);
    }
    return std::norm(h);
  }
};

// Hill climb on |H|^2 with an 8-neighbor compass pattern, halving the
// step when no neighbor improves. Works on any smooth 2pi-periodic
// response; the start must be within the peak's basin.
template <typename F>
double refine_peak(const F& f, double u, double v, double step) {
  double best = f(u, v);
  int evals = 0;
  while (step > 1e-11 && evals < 60000) {
    static const int du[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    static const int dv[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    int best_dir = -1;
    double cand_best = best;
    for (int d = 0; d < 8; ++d) {
      const double val = f(u + du[d] * step, v + dv[d] * step);
      ++evals;
      if (val > cand_best) {
        cand_best = val;
        best_dir = d;
      }
    }
    if (best_dir >= 0) {
      u += du[best_dir] * step;
      v += dv[best_dir] * step;
      best = cand_best;
    } else {
      step *= 0.5;
    }
  }
  return best;
}

double separable_peak(const SeparableKernel& k, int w_n, int w_k,
                      double carrier_u, double carrier_v) {
  const int grid = 128;
  const double spacing = 2.0 * M_PI / grid;

  // Per-axis transforms on the grid, then the best grid point.
  std::vector<std::complex<double>> row_t[3], col_t[3];
  for (int j = 0; j < 3; ++j) {
    if (k.rows[j].empty()) continue;
    row_t[j].resize(grid);
    col_t[j].resize(grid);
    for (int g = 0; g < grid; ++g) {
      const double w = -M_PI + g * spacing;
      row_t[j][g] = SeparableKernel::dtft(k.rows[j], w);
      col_t[j][g] = SeparableKernel::dtft(k.cols[j], w);
    }
  }
  double best = -1.0;
  double bu = 0.0, bv = 0.0;
  for (int gu = 0; gu < grid; ++gu) {
    for (int gv = 0; gv < grid; ++gv) {
      std::complex<double> h(0.0, 0.0);
      for (int j = 0; j < 3; ++j) {
        if (k.rows[j].empty()) continue;
        h += k.sign[j] * row_t[j][gu] * col_t[j][gv];
      }
      const double m = std::norm(h);
      if (m > best) {
        best = m;
        bu = -M_PI + gu * spacing;
        bv = -M_PI + gv * spacing;
      }
    }
  }
  // The carrier frequency is the natural peak candidate as well.
  const double at_carrier = k.magnitude_sq(carrier_u, carrier_v);
  if (at_carrier > best) {
    best = at_carrier;
    bu = carrier_u;
    bv = carrier_v;
  }
  (void)w_n;
  (void)w_k;
  const double refined = refine_peak(
      [&k](double u, double v) { return k.magnitude_sq(u, v); }, bu, bv,
      spacing);
  return std::sqrt(std::max(refined, best));
}

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

int support_length(double f_cycles, double nu, int cap) {
  if (f_cycles < 0.0)
    throw std::invalid_argument("support_length: negative modulation");
  if (nu <= 0.0)
    throw std::invalid_argument("support_length: oscillations must be > 0");
  if (cap < 1 || cap % 2 == 0)
    throw std::invalid_argument("support_length: cap must be odd and >= 1");
  if (f_cycles == 0.0) return cap;
  const double ideal = nu / f_cycles;
  if (ideal >= cap) return cap;
  // Nearest odd integer, ties upward.
  return 2 * static_cast<int>(std::floor(ideal / 2.0)) + 1;
}

std::vector<double> spectral_modulation_set(double max_cpc, double overlap,
                                            int count) {
  if (!(max_cpc > 0.0) || !(overlap > 0.0) || !(overlap < 1.0) || count < 1)
    throw std::invalid_argument("spectral_modulation_set: bad parameters");
  const double ratio = (1.0 - overlap) / (1.0 + overlap);
  std::vector<double> mods = {0.0};
  double f = max_cpc * std::pow(ratio, count - 1);
  for (int i = 0; i < count; ++i) {
    mods.push_back(f);
    f /= ratio;
  }
  mods.back() = max_cpc;  // exact endpoint
  return mods;
}

GfbConfig GfbConfig::defaults(const MelConfig& mel) {
  GfbConfig cfg;
  cfg.frame_shift_s = mel.frame_shift_s;
  cfg.n_mel_channels = mel.n_channels;
  cfg.center_channel = center_channel_1khz(mel);
  return cfg;
}

void GfbConfig::validate() const {
  auto check_set = [](const std::vector<double>& mods, const char* which) {
    if (mods.empty() || mods.front() != 0.0)
      throw std::invalid_argument(std::string("gabor config: ") + which +
                                  " modulation set must start with 0");
    for (size_t i = 1; i < mods.size(); ++i) {
      if (!(mods[i] > mods[i - 1]) || !std::isfinite(mods[i]))
        throw std::invalid_argument(std::string("gabor config: ") + which +
                                    " modulations must be strictly increasing");
    }
  };
  check_set(temporal_mods_hz, "temporal");
  check_set(spectral_mods_cpc, "spectral");
  if (!(oscillations > 0.0))
    throw std::invalid_argument("gabor config: oscillations must be > 0");
  if (max_time_frames < 1 || max_time_frames % 2 == 0 ||
      max_freq_channels < 1 || max_freq_channels % 2 == 0)
    throw std::invalid_argument("gabor config: size caps must be odd");
  if (!(frame_shift_s > 0.0))
    throw std::invalid_argument("gabor config: frame shift must be > 0");
  if (n_mel_channels < 1)
    throw std::invalid_argument("gabor config: need at least one channel");
  if (center_channel < 0 || center_channel >= n_mel_channels)
    throw std::invalid_argument("gabor config: center channel out of range");
}

const char* subgroup_name(Subgroup g) {
  switch (g) {
    case Subgroup::Full: return "full";
    case Subgroup::Ltm: return "ltm";
    case Subgroup::Mtm: return "mtm";
    case Subgroup::Htm: return "htm";
    case Subgroup::Dc: return "dc";
  }
  return "?";
}

Subgroup parse_subgroup(const std::string& name) {
  for (Subgroup g : {Subgroup::Full, Subgroup::Ltm, Subgroup::Mtm,
                     Subgroup::Htm, Subgroup::Dc}) {
    if (name == subgroup_name(g)) return g;
  }
  throw std::invalid_argument("unknown subgroup '" + name +
                              "' (valid: full, ltm, mtm, htm, dc)");
}

std::vector<FilterParams> modulation_grid(const GfbConfig& cfg) {
  cfg.validate();
  std::vector<FilterParams> grid;
  for (double f_k : cfg.spectral_mods_cpc) {
    const int w_k =
        support_length(f_k, cfg.oscillations, cfg.max_freq_channels);
    for (double f_n : cfg.temporal_mods_hz) {
      const int w_n = support_length(f_n * cfg.frame_shift_s,
                                     cfg.oscillations, cfg.max_time_frames);
      FilterParams p;
      p.f_n_hz = f_n;
      p.f_k_cpc = f_k;
      p.w_n = w_n;
      p.w_k = w_k;
      p.n0 = (w_n - 1) / 2;
      p.k0 = (w_k - 1) / 2;
      p.orientation = +1;
      grid.push_back(p);
      if (f_n > 0.0 && f_k > 0.0) {
        p.orientation = -1;
        grid.push_back(p);
      }
    }
  }
  return grid;
}

std::vector<FilterParams> select_subgroup(
    const std::vector<FilterParams>& grid, Subgroup subgroup) {
  if (subgroup == Subgroup::Full) return grid;

  std::vector<FilterParams> out;
  if (subgroup == Subgroup::Dc) {
    for (const auto& p : grid)
      if (p.f_n_hz == 0.0) out.push_back(p);
    if (out.empty())
      throw std::invalid_argument(
          "subgroup dc: no zero temporal modulation in the grid");
    return out;
  }

  const double* pair = subgroup == Subgroup::Ltm   ? kLtmPair
                       : subgroup == Subgroup::Mtm ? kMtmPair
                                                   : kHtmPair;
  bool seen[2] = {false, false};
  for (const auto& p : grid) {
    for (int i = 0; i < 2; ++i) {
      if (std::abs(p.f_n_hz - pair[i]) <= kFreqTol) {
        out.push_back(p);
        seen[i] = true;
      }
    }
  }
  for (int i = 0; i < 2; ++i) {
    if (!seen[i])
      throw std::invalid_argument(
          "subgroup " + std::string(subgroup_name(subgroup)) + ": " +
          std::to_string(pair[i]) + " Hz is not present in the grid");
  }
  return out;
}

GaborFilter build_gabor_filter(const FilterParams& p, const GfbConfig& cfg) {
  cfg.validate();
  if (p.f_n_hz < 0.0 || p.f_k_cpc < 0.0)
    throw std::invalid_argument("build_gabor_filter: negative modulation");
  if (p.w_n < 1 || p.w_k < 1 || p.w_n % 2 == 0 || p.w_k % 2 == 0)
    throw std::invalid_argument("build_gabor_filter: supports must be odd");

  const int w_n = p.w_n, w_k = p.w_k;
  const int hn = p.n0, hk = p.k0;
  const double omega_n = 2.0 * M_PI * p.f_n_hz * cfg.frame_shift_s;
  const double omega_k = 2.0 * M_PI * p.f_k_cpc * p.orientation;

  const std::vector<double> env_n = hann_envelope(w_n);
  const std::vector<double> env_k = hann_envelope(w_k);

  SeparableKernel sep;
  sep.rows[0].resize(w_n);
  sep.rows[1].resize(w_n);
  sep.cols[0].resize(w_k);
  sep.cols[1].resize(w_k);
  for (int n = 0; n < w_n; ++n) {
    sep.rows[0][n] = env_n[n] * std::cos(omega_n * (n - hn));
    sep.rows[1][n] = env_n[n] * std::sin(omega_n * (n - hn));
  }
  for (int k = 0; k < w_k; ++k) {
    sep.cols[0][k] = env_k[k] * std::cos(omega_k * (k - hk));
    sep.cols[1][k] = env_k[k] * std::sin(omega_k * (k - hk));
  }

  // Real part of the complex carrier times the envelope:
  // cos(a+b) = cos a cos b - sin a sin b keeps the kernel separable.
  GaborFilter filt;
  filt.params = p;
  filt.kernel = Matrix(w_k, w_n);
  for (int k = 0; k < w_k; ++k)
    for (int n = 0; n < w_n; ++n)
      filt.kernel(k, n) = sep.cols[0][k] * sep.rows[0][n] -
                          sep.cols[1][k] * sep.rows[1][n];

  const bool pure_dc = (p.f_n_hz == 0.0 && p.f_k_cpc == 0.0);
  if (!pure_dc) {
    // Cancel the kernel mean with a scaled envelope so constant inputs
    // map to zero.
    double kernel_sum = 0.0, env_sum = 0.0;
    for (int k = 0; k < w_k; ++k)
      for (int n = 0; n < w_n; ++n) {
        kernel_sum += filt.kernel(k, n);
        env_sum += env_k[k] * env_n[n];
      }
    const double alpha = kernel_sum / env_sum;
    for (int k = 0; k < w_k; ++k)
      for (int n = 0; n < w_n; ++n)
        filt.kernel(k, n) -= alpha * env_k[k] * env_n[n];
    sep.rows[2] = env_n;
    sep.cols[2].resize(w_k);
    for (int k = 0; k < w_k; ++k) sep.cols[2][k] = alpha * env_k[k];
  }

  const double peak = separable_peak(sep, w_n, w_k, omega_n, omega_k);
  for (int k = 0; k < w_k; ++k)
    for (int n = 0; n < w_n; ++n) filt.kernel(k, n) /= peak;
  return filt;
}

std::vector<int> critical_channels(const FilterParams& p,
                                   const GfbConfig& cfg) {
  const int n = cfg.n_mel_channels;
  // Purely temporal filters carry no spectral structure to sample.
  if (p.f_k_cpc == 0.0) return {cfg.center_channel};

  // Filters at the bank's smallest spectral extent keep every channel.
  const double max_mod = cfg.spectral_mods_cpc.back();
  const int smallest_extent =
      support_length(max_mod, cfg.oscillations, cfg.max_freq_channels);
  std::vector<int> chans;
  if (p.w_k <= smallest_extent) {
    chans.resize(n);
    std::iota(chans.begin(), chans.end(), 0);
    return chans;
  }

  const int step = std::max(
      1, static_cast<int>(std::lround(static_cast<double>(p.w_k) / 4.0)));
  for (int ch = cfg.center_channel % step; ch < n; ch += step)
    chans.push_back(ch);
  return chans;
}

int FilterbankSpec::feature_dims() const {
  int d = 0;
  for (const auto& s : sampling) d += static_cast<int>(s.size());
  return d;
}

FilterbankSpec build_filterbank(const GfbConfig& cfg, Subgroup subgroup) {
  cfg.validate();
  FilterbankSpec spec;
  spec.config = cfg;
  spec.subgroup = subgroup;
  const auto params = select_subgroup(modulation_grid(cfg), subgroup);
  spec.filters.reserve(params.size());
  spec.sampling.reserve(params.size());
  for (const auto& p : params) {
    spec.filters.push_back(build_gabor_filter(p, cfg));
    spec.sampling.push_back(critical_channels(p, cfg));
  }
  return spec;
}

double peak_frequency_response(const Matrix& kernel) {
  const int w_k = kernel.rows(), w_n = kernel.cols();
  const int hn = (w_n - 1) / 2, hk = (w_k - 1) / 2;

  // Coarse scan with a zero-padded FFT; the real-input transform covers
  // half the spectrum, which is enough for a magnitude peak.
  const int grid = 128;
  double* buf = fftw_alloc_real(static_cast<size_t>(grid) * grid);
  fftw_complex* spec =
      fftw_alloc_complex(static_cast<size_t>(grid) * (grid / 2 + 1));
  std::memset(buf, 0, sizeof(double) * grid * grid);
  for (int k = 0; k < w_k; ++k)
    for (int n = 0; n < w_n; ++n)
      buf[static_cast<size_t>(k) * grid + n] = kernel(k, n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_r2c_2d(grid, grid, buf, spec, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  double best = -1.0;
  double bu = 0.0, bv = 0.0;
  for (int r = 0; r < grid; ++r) {
    for (int c = 0; c <= grid / 2; ++c) {
      const fftw_complex& z = spec[static_cast<size_t>(r) * (grid / 2 + 1) + c];
      const double m = z[0] * z[0] + z[1] * z[1];
      if (m > best) {
        best = m;
        bv = 2.0 * M_PI * r / grid;  // spectral axis (rows)
        bu = 2.0 * M_PI * c / grid;  // temporal axis (cols)
      }
    }
  }
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(buf);
  fftw_free(spec);

  auto mag_sq = [&](double u, double v) {
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k < w_k; ++k) {
      for (int n = 0; n < w_n; ++n) {
        const double phase = -(u * (n - hn) + v * (k - hk));
        acc += kernel(k, n) *
               std::complex<double>(std::cos(phase), std::sin(phase));
      }
    }
    return std::norm(acc);
  };
  const double refined = refine_peak(mag_sq, bu, bv, 2.0 * M_PI / grid);
  return std::sqrt(std::max(refined, best));
}

}  // namespace gaborfeat
