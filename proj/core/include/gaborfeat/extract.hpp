// core/include/gaborfeat/extract.hpp

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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaborfeat/features.hpp"
#include "gaborfeat/gabor.hpp"
#include "gaborfeat/matrix.hpp"
#include "gaborfeat/mel.hpp"

namespace gaborfeat {

// Padding applied around the spectrogram before filtering: zeros beyond
// the channel range, replicated first/last frames beyond the time range.
struct PaddingPolicy {
  enum class Spectral { Zero } spectral = Spectral::Zero;
  enum class Temporal { ReplicateEdge } temporal = Temporal::ReplicateEdge;
};

enum class ConvMethod { Direct, Fft };

// Same-size correlation of the spectrogram (frames x channels) with the
// kernel centered on each output cell, under the padding policy above.
//
// Kernels with negative entries additionally get their position-dependent
// DC response compensated: the local mean of the input (|kernel|-weighted,
// renormalized over the in-range part) scaled by the kernel's DC gain at
// that position is subtracted. Interior cells are unaffected (the kernels
// are zero-mean there); at the spectral borders this keeps the response
// to a constant input exactly zero. The output stays linear in the input.
Matrix convolve2d(const LogMelSpectrogram& spec, const GaborFilter& filt,
                  const PaddingPolicy& pad = {},
                  ConvMethod method = ConvMethod::Direct);

// Runs every filter of the bank over the spectrogram and stacks the
// critically sampled channels in filter order. Provenance entries are
// "f<filter index>:c<channel>".
FeatureMatrix extract_features(const LogMelSpectrogram& spec,
                               const FilterbankSpec& fb,
                               ConvMethod method = ConvMethod::Direct);

// One piece of a combined feature set.
struct CombinationPart {
  enum class Kind { FeatureSet, Zeros, UniformRandom } kind = Kind::FeatureSet;
  Subgroup subgroup = Subgroup::Htm;  // FeatureSet
  int dims = 0;                       // Zeros / UniformRandom
  std::uint64_t seed = 0;             // UniformRandom
};

struct CombinationSpec {
  std::vector<CombinationPart> parts;
};

// Parses "htm,zeros:202" / "ltm,htm" / "random:202,htm" style lists.
// The seed applies to every random part.
CombinationSpec parse_combination(const std::string& text,
                                  std::uint64_t seed);

// Horizontal concatenation in part order. Zero parts append zero columns;
// random parts append i.i.d. uniform [-1, 1) values from a seeded
// mt19937_64 (top 53 bits, frame-major fill), reproducible across runs
// and platforms. All referenced feature sets must have `frames` rows.
FeatureMatrix combine_features(
    int frames, const CombinationSpec& spec,
    const std::map<Subgroup, FeatureMatrix>& inputs);

}  // namespace gaborfeat
