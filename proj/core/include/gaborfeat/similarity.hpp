// core/include/gaborfeat/similarity.hpp

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

#include "gaborfeat/features.hpp"
#include "gaborfeat/labels.hpp"
#include "gaborfeat/matrix.hpp"

namespace gaborfeat {

// Per-phoneme mean vectors over the labeled frames of a feature or
// activation matrix.
struct CentroidSet {
  std::vector<std::string> phonemes;  // ordered as in the request list
  Matrix centroids;                   // P x D
  std::vector<long> counts;           // frames per phoneme, all > 0
  std::vector<std::string> dropped;   // requested but without any frames
};

// P x P cosine similarities between centroids in [-1, 1], symmetric with
// unit diagonal. `ordering[i]` is the original index of the i-th
// row/column after a reordering (identity until rcm_order is applied).
struct SimilarityMatrix {
  std::vector<std::string> phonemes;
  Matrix values;
  double threshold_deg = 0.0;  // 0 = unthresholded
  std::vector<int> ordering;
};

// Per-dimension zero-mean/unit-variance scaling over all frames
// (population standard deviation). Dimensions with sigma < 1e-12 are only
// mean-subtracted. Requires at least 2 frames.
FeatureMatrix normalize_features(const FeatureMatrix& m);

// Mean row per phoneme over the frames its segments cover. Segment frame
// ranges must lie inside the matrix; phonemes not in `phoneme_list` are
// ignored, listed phonemes without frames are dropped and reported.
CentroidSet class_centroids(const FeatureMatrix& m, const LabelTrack& labels,
                            const std::vector<std::string>& phoneme_list);

// (v1 . v2) / (|v1| |v2|); rejects zero-norm inputs.
double cosine_similarity(const std::vector<double>& v1,
                         const std::vector<double>& v2);

// All pairwise centroid similarities; needs >= 2 phonemes and nonzero
// centroids (the offending phoneme is named otherwise).
SimilarityMatrix similarity_matrix(const CentroidSet& cs);

// Zeroes off-diagonal entries below cos(angle_deg); the diagonal is left
// alone. 0 < angle_deg < 180.
SimilarityMatrix threshold_matrix(const SimilarityMatrix& sm,
                                  double angle_deg);

// Reverse Cuthill-McKee ordering of the graph with an edge wherever an
// off-diagonal entry is >= cos(angle_deg). Components are explored from
// minimum-degree seeds, neighbors in increasing-degree order, with ties
// on the original index, and each component's visit order is reversed.
// Edgeless graphs therefore map to the identity permutation.
std::vector<int> rcm_order(const SimilarityMatrix& sm, double angle_deg);

// Rows, columns, names and ordering permuted so that row i of the result
// is row order[i] of the input.
SimilarityMatrix apply_ordering(const SimilarityMatrix& sm,
                                const std::vector<int>& order);

// max |i - j| over edges under the given vertex ordering; 0 when there
// are no edges. Used by tests and reporting.
int graph_bandwidth(const SimilarityMatrix& sm, double angle_deg,
                    const std::vector<int>& order);

}  // namespace gaborfeat
