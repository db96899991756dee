// core/src/similarity.cpp

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

#include "gaborfeat/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace gaborfeat {

namespace {

double threshold_value(double angle_deg) {
  if (!(angle_deg > 0.0) || !(angle_deg < 180.0))
    throw std::invalid_argument("threshold angle must be in (0, 180) degrees");
  return std::cos(angle_deg * M_PI / 180.0);
}

std::vector<std::vector<int>> adjacency(const SimilarityMatrix& sm,
                                        double cutoff) {
  const int p = sm.values.rows();
  std::vector<std::vector<int>> adj(p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j && sm.values(i, j) >= cutoff) adj[i].push_back(j);
  return adj;
}

}  // namespace

FeatureMatrix normalize_features(const FeatureMatrix& m) {
  const int frames = m.frames(), dims = m.dims();
  if (frames < 2)
    throw std::invalid_argument(
        "normalize_features: need at least 2 frames, got " +
        std::to_string(frames));
  FeatureMatrix out = m;
  for (int d = 0; d < dims; ++d) {
    double mean = 0.0;
    for (int t = 0; t < frames; ++t) mean += m.values(t, d);
    mean /= frames;
    double var = 0.0;
    for (int t = 0; t < frames; ++t) {
      const double dev = m.values(t, d) - mean;
      var += dev * dev;
    }
    const double sigma = std::sqrt(var / frames);
    const double scale = sigma < 1e-12 ? 1.0 : 1.0 / sigma;
    for (int t = 0; t < frames; ++t)
      out.values(t, d) = (m.values(t, d) - mean) * scale;
  }
  return out;
}

CentroidSet class_centroids(const FeatureMatrix& m, const LabelTrack& labels,
                            const std::vector<std::string>& phoneme_list) {
  const int frames = m.frames(), dims = m.dims();
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < phoneme_list.size(); ++i)
    index.emplace(phoneme_list[i], static_cast<int>(i));

  Matrix sums(static_cast<int>(phoneme_list.size()), dims);
  std::vector<long> counts(phoneme_list.size(), 0);
  for (const auto& seg : labels.segments) {
    const auto it = index.find(seg.phoneme);
    if (it == index.end()) continue;  // not under analysis
    if (seg.start_frame < 0 || seg.end_frame > frames)
      throw std::runtime_error("label segment [" +
                               std::to_string(seg.start_frame) + ", " +
                               std::to_string(seg.end_frame) +
                               ") is outside the " + std::to_string(frames) +
                               "-frame feature matrix");
    for (long t = seg.start_frame; t < seg.end_frame; ++t) {
      double* acc = sums.row(it->second);
      const double* row = m.values.row(static_cast<int>(t));
      for (int d = 0; d < dims; ++d) acc[d] += row[d];
      ++counts[it->second];
    }
  }

  CentroidSet cs;
  int kept = 0;
  for (size_t i = 0; i < phoneme_list.size(); ++i) kept += counts[i] > 0;
  cs.centroids = Matrix(kept, dims);
  int row = 0;
  for (size_t i = 0; i < phoneme_list.size(); ++i) {
    if (counts[i] == 0) {
      cs.dropped.push_back(phoneme_list[i]);
      continue;
    }
    cs.phonemes.push_back(phoneme_list[i]);
    cs.counts.push_back(counts[i]);
    const double inv = 1.0 / static_cast<double>(counts[i]);
    for (int d = 0; d < dims; ++d)
      cs.centroids(row, d) = sums(static_cast<int>(i), d) * inv;
    ++row;
  }
  return cs;
}

double cosine_similarity(const std::vector<double>& v1,
                         const std::vector<double>& v2) {
  if (v1.size() != v2.size())
    throw std::invalid_argument("cosine_similarity: dimension mismatch");
  double dot = 0.0, n1 = 0.0, n2 = 0.0;
  for (size_t i = 0; i < v1.size(); ++i) {
    dot += v1[i] * v2[i];
    n1 += v1[i] * v1[i];
    n2 += v2[i] * v2[i];
  }
  if (n1 == 0.0 || n2 == 0.0)
    throw std::invalid_argument("cosine_similarity: zero-norm vector");
  return dot / (std::sqrt(n1) * std::sqrt(n2));
}

SimilarityMatrix similarity_matrix(const CentroidSet& cs) {
  const int p = cs.centroids.rows();
  const int dims = cs.centroids.cols();
  if (p < 2)
    throw std::invalid_argument(
        "similarity_matrix: need at least 2 phoneme classes, got " +
        std::to_string(p));

  std::vector<double> norms(p);
  for (int i = 0; i < p; ++i) {
    double n = 0.0;
    const double* row = cs.centroids.row(i);
    for (int d = 0; d < dims; ++d) n += row[d] * row[d];
    if (n == 0.0)
      throw std::runtime_error("similarity_matrix: zero-norm centroid for " +
                               cs.phonemes[i]);
    norms[i] = std::sqrt(n);
  }

  SimilarityMatrix sm;
  sm.phonemes = cs.phonemes;
  sm.values = Matrix(p, p);
  sm.ordering.resize(p);
  for (int i = 0; i < p; ++i) sm.ordering[i] = i;
  for (int i = 0; i < p; ++i) {
    sm.values(i, i) = 1.0;
    for (int j = i + 1; j < p; ++j) {
      double dot = 0.0;
      const double* a = cs.centroids.row(i);
      const double* b = cs.centroids.row(j);
      for (int d = 0; d < dims; ++d) dot += a[d] * b[d];
      const double s = dot / (norms[i] * norms[j]);
      sm.values(i, j) = s;
      sm.values(j, i) = s;
    }
  }
  return sm;
}

SimilarityMatrix threshold_matrix(const SimilarityMatrix& sm,
                                  double angle_deg) {
  const double cutoff = threshold_value(angle_deg);
  SimilarityMatrix out = sm;
  out.threshold_deg = angle_deg;
  for (int i = 0; i < out.values.rows(); ++i)
    for (int j = 0; j < out.values.cols(); ++j)
      if (i != j && out.values(i, j) < cutoff) out.values(i, j) = 0.0;
  return out;
}

std::vector<int> rcm_order(const SimilarityMatrix& sm, double angle_deg) {
  const double cutoff = threshold_value(angle_deg);
  const int p = sm.values.rows();
  const auto adj = adjacency(sm, cutoff);

  std::vector<int> by_degree(p);
  for (int i = 0; i < p; ++i) by_degree[i] = i;
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    if (adj[a].size() != adj[b].size()) return adj[a].size() < adj[b].size();
    return a < b;
  });

  std::vector<int> order;
  order.reserve(p);
  std::vector<char> visited(p, 0);
  for (int seed : by_degree) {
    if (visited[seed]) continue;
    // Cuthill-McKee walk of this component, then reverse it in place.
    const size_t component_start = order.size();
    std::deque<int> queue{seed};
    visited[seed] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      std::vector<int> next;
      for (int u : adj[v])
        if (!visited[u]) next.push_back(u);
      std::sort(next.begin(), next.end(), [&](int a, int b) {
        if (adj[a].size() != adj[b].size())
          return adj[a].size() < adj[b].size();
        return a < b;
      });
      for (int u : next) {
        visited[u] = 1;
        queue.push_back(u);
      }
    }
    std::reverse(order.begin() + component_start, order.end());
  }
  return order;
}

SimilarityMatrix apply_ordering(const SimilarityMatrix& sm,
                                const std::vector<int>& order) {
  const int p = sm.values.rows();
  if (static_cast<int>(order.size()) != p)
    throw std::invalid_argument("apply_ordering: permutation size mismatch");
  SimilarityMatrix out;
  out.threshold_deg = sm.threshold_deg;
  out.values = Matrix(p, p);
  out.phonemes.resize(p);
  out.ordering.resize(p);
  for (int i = 0; i < p; ++i) {
    out.phonemes[i] = sm.phonemes[order[i]];
    out.ordering[i] = sm.ordering[order[i]];
    for (int j = 0; j < p; ++j)
      out.values(i, j) = sm.values(order[i], order[j]);
  }
  return out;
}

int graph_bandwidth(const SimilarityMatrix& sm, double angle_deg,
                    const std::vector<int>& order) {
  const double cutoff = threshold_value(angle_deg);
  const int p = sm.values.rows();
  std::vector<int> position(p);
  for (int i = 0; i < p; ++i) position[order[i]] = i;
  int bandwidth = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (sm.values(i, j) >= cutoff)
        bandwidth = std::max(bandwidth, std::abs(position[i] - position[j]));
  return bandwidth;
}

}  // namespace gaborfeat
