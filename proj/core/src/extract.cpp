// core/src/extract.cpp

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

#include "gaborfeat/extract.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gaborfeat/fft.hpp"

namespace gaborfeat {

namespace {

// Spectrogram with replicated edge frames along time and zeros beyond the
// channel range, sized so the kernel fits at every input cell.
Matrix pad_spectrogram(const Matrix& spec, int hn, int hk) {
  const int frames = spec.rows(), chans = spec.cols();
  Matrix padded(frames + 2 * hn, chans + 2 * hk, 0.0);
  for (int t = 0; t < frames + 2 * hn; ++t) {
    const int src = std::clamp(t - hn, 0, frames - 1);
    for (int c = 0; c < chans; ++c) padded(t, hk + c) = spec(src, c);
  }
  return padded;
}

// Valid correlation of the padded input with the kernel; output matches
// the unpadded input size. The kernel arrives transposed (time-major) so
// both inner loops run over contiguous memory.
Matrix correlate_direct(const Matrix& padded, const Matrix& kernel_t,
                        int frames, int chans) {
  const int w_n = kernel_t.rows(), w_k = kernel_t.cols();
  Matrix out(frames, chans);
  for (int t = 0; t < frames; ++t) {
    for (int c = 0; c < chans; ++c) {
      double acc = 0.0;
      for (int i = 0; i < w_n; ++i) {
        const double* prow = padded.row(t + i) + c;
        const double* krow = kernel_t.row(i);
        for (int j = 0; j < w_k; ++j) acc += krow[j] * prow[j];
      }
      out(t, c) = acc;
    }
  }
  return out;
}

// Same result through zero-padded FFTs. The kernel is flipped so the
// frequency-domain product is a correlation.
Matrix correlate_fft(const Matrix& padded, const Matrix& kernel,
                     int frames, int chans) {
  const int w_k = kernel.rows(), w_n = kernel.cols();
  Matrix flipped(w_n, w_k);
  for (int k = 0; k < w_k; ++k)
    for (int n = 0; n < w_n; ++n)
      flipped(w_n - 1 - n, w_k - 1 - k) = kernel(k, n);
  const Matrix full = fft_convolve_full(padded, flipped);
  Matrix out(frames, chans);
  for (int t = 0; t < frames; ++t)
    for (int c = 0; c < chans; ++c)
      out(t, c) = full(t + w_n - 1, c + w_k - 1);
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

}  // namespace

Matrix convolve2d(const LogMelSpectrogram& spec, const GaborFilter& filt,
                  const PaddingPolicy& pad, ConvMethod method) {
  (void)pad;  // both policies have a single fixed value
  const Matrix& kernel = filt.kernel;
  const int frames = spec.values.rows();
  const int chans = spec.values.cols();
  if (frames < 1)
    throw std::invalid_argument("convolve2d: empty spectrogram");
  const int w_k = kernel.rows(), w_n = kernel.cols();
  const int hn = (w_n - 1) / 2, hk = (w_k - 1) / 2;

  const Matrix padded = pad_spectrogram(spec.values, hn, hk);
  const Matrix kernel_t = transpose(kernel);

  auto correlate = [&](const Matrix& input, const Matrix& k,
                       const Matrix& k_t) {
    return method == ConvMethod::Fft
               ? correlate_fft(input, k, frames, chans)
               : correlate_direct(input, k_t, frames, chans);
  };

  Matrix raw = correlate(padded, kernel, kernel_t);

  double min_coef = 0.0, l1 = 0.0;
  for (int k = 0; k < w_k; ++k)
    for (int n = 0; n < w_n; ++n) {
      min_coef = std::min(min_coef, kernel(k, n));
      l1 += std::abs(kernel(k, n));
    }
  if (min_coef >= 0.0) return raw;  // all-positive kernels pass DC as-is

  // Position-dependent DC compensation: subtract the kernel's local DC
  // gain times a local mean of the input, the mean taken with the
  // |kernel| envelope renormalized over the spectrally in-range part.
  // Constant inputs then map to exactly zero, borders included.
  Matrix env(w_k, w_n);
  for (int k = 0; k < w_k; ++k)
    for (int n = 0; n < w_n; ++n) env(k, n) = std::abs(kernel(k, n)) / l1;
  const Matrix env_t = transpose(env);

  Matrix smooth_num = correlate(padded, env, env_t);

  // The in-range mask is constant along time (edge frames are replicated
  // data), so the kernel's DC gain and the envelope mass reduce to
  // per-channel sums over the spectrally valid kernel columns.
  std::vector<double> col_sum_k(w_k, 0.0), col_sum_e(w_k, 0.0);
  for (int k = 0; k < w_k; ++k)
    for (int n = 0; n < w_n; ++n) {
      col_sum_k[k] += kernel(k, n);
      col_sum_e[k] += env(k, n);
    }
  for (int c = 0; c < chans; ++c) {
    double dc_gain = 0.0, env_mass = 0.0;
    for (int k = 0; k < w_k; ++k) {
      const int src = c + k - hk;
      if (src >= 0 && src < chans) {
        dc_gain += col_sum_k[k];
        env_mass += col_sum_e[k];
      }
    }
    for (int t = 0; t < frames; ++t)
      raw(t, c) -= dc_gain * (smooth_num(t, c) / env_mass);
  }
  return raw;
}

FeatureMatrix extract_features(const LogMelSpectrogram& spec,
                               const FilterbankSpec& fb, ConvMethod method) {
  if (spec.values.cols() != fb.config.n_mel_channels)
    throw std::invalid_argument(
        "extract_features: spectrogram has " +
        std::to_string(spec.values.cols()) + " channels, filterbank expects " +
        std::to_string(fb.config.n_mel_channels));

  const int frames = spec.values.rows();
  const int dims = fb.feature_dims();
  FeatureMatrix out;
  out.values = Matrix(frames, dims);
  out.frame_shift_s = spec.frame_shift_s;
  out.dim_provenance.reserve(dims);

  int col = 0;
  for (size_t f = 0; f < fb.filters.size(); ++f) {
    const Matrix response = convolve2d(spec, fb.filters[f], {}, method);
    for (int ch : fb.sampling[f]) {
      for (int t = 0; t < frames; ++t) out.values(t, col) = response(t, ch);
      out.dim_provenance.push_back("f" + std::to_string(f) + ":c" +
                                   std::to_string(ch));
      ++col;
    }
  }
  return out;
}

CombinationSpec parse_combination(const std::string& text,
                                  std::uint64_t seed) {
  CombinationSpec spec;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string tok = text.substr(start, end - start);
    if (tok.empty())
      throw std::invalid_argument("combination: empty part in '" + text + "'");
    CombinationPart part;
    const size_t colon = tok.find(':');
    const std::string head = tok.substr(0, colon);
    if (head == "zeros" || head == "random") {
      if (colon == std::string::npos)
        throw std::invalid_argument("combination: '" + head +
                                    "' needs a dimension, e.g. " + head +
                                    ":202");
      int dims = 0;
      try {
        dims = std::stoi(tok.substr(colon + 1));
      } catch (const std::exception&) {
        dims = 0;
      }
      if (dims <= 0)
        throw std::invalid_argument("combination: bad dimension in '" + tok +
                                    "'");
      part.kind = head == "zeros" ? CombinationPart::Kind::Zeros
                                  : CombinationPart::Kind::UniformRandom;
      part.dims = dims;
      part.seed = seed;
    } else {
      part.kind = CombinationPart::Kind::FeatureSet;
      part.subgroup = parse_subgroup(tok);
    }
    spec.parts.push_back(part);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (spec.parts.empty())
    throw std::invalid_argument("combination: no parts given");
  return spec;
}

FeatureMatrix combine_features(
    int frames, const CombinationSpec& spec,
    const std::map<Subgroup, FeatureMatrix>& inputs) {
  int dims = 0;
  for (const auto& part : spec.parts) {
    if (part.kind == CombinationPart::Kind::FeatureSet) {
      const auto it = inputs.find(part.subgroup);
      if (it == inputs.end())
        throw std::invalid_argument(
            std::string("combine_features: no input features for subgroup ") +
            subgroup_name(part.subgroup));
      if (it->second.frames() != frames)
        throw std::invalid_argument(
            "combine_features: frame count mismatch for subgroup " +
            std::string(subgroup_name(part.subgroup)) + " (" +
            std::to_string(it->second.frames()) + " vs " +
            std::to_string(frames) + ")");
      dims += it->second.dims();
    } else {
      dims += part.dims;
    }
  }
  if (dims <= 0)
    throw std::invalid_argument("combine_features: empty combination");

  FeatureMatrix out;
  out.values = Matrix(frames, dims);
  out.dim_provenance.reserve(dims);

  int col = 0;
  for (const auto& part : spec.parts) {
    switch (part.kind) {
      case CombinationPart::Kind::FeatureSet: {
        const FeatureMatrix& src = inputs.at(part.subgroup);
        out.frame_shift_s = src.frame_shift_s;
        for (int d = 0; d < src.dims(); ++d) {
          for (int t = 0; t < frames; ++t)
            out.values(t, col + d) = src.values(t, d);
          out.dim_provenance.push_back(
              std::string(subgroup_name(part.subgroup)) + ":" +
              src.dim_provenance[d]);
        }
        col += src.dims();
        break;
      }
      case CombinationPart::Kind::Zeros: {
        for (int d = 0; d < part.dims; ++d)
          out.dim_provenance.push_back("zeros:" + std::to_string(d));
        col += part.dims;  // matrix is zero-initialized
        break;
      }
      case CombinationPart::Kind::UniformRandom: {
        // Fixed generator and bit mapping so outputs are identical across
        // platforms and standard libraries.
        std::mt19937_64 gen(part.seed);
        for (int t = 0; t < frames; ++t)
          for (int d = 0; d < part.dims; ++d) {
            const double unit =
                static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0,1)
            out.values(t, col + d) = 2.0 * unit - 1.0;         // [-1,1)
          }
        for (int d = 0; d < part.dims; ++d)
          out.dim_provenance.push_back("random:" + std::to_string(d));
        col += part.dims;
        break;
      }
    }
  }
  return out;
}

}  // namespace gaborfeat
