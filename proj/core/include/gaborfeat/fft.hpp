// core/include/gaborfeat/fft.hpp

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

#include <complex>
#include <memory>
#include <vector>

#include "gaborfeat/matrix.hpp"

namespace gaborfeat {

// Thin FFTW wrappers. Plan creation is serialized internally (FFTW's
// planner is not thread safe); execution on per-instance buffers is.
// Each thread should own its transform objects.

class RealFft1d {
 public:
  explicit RealFft1d(int n);
  ~RealFft1d();
  RealFft1d(const RealFft1d&) = delete;
  RealFft1d& operator=(const RealFft1d&) = delete;

  int size() const { return n_; }
  // Forward transform of n real samples; returns n/2+1 complex bins.
  void forward(const double* in, std::complex<double>* out) const;

 private:
  struct Impl;
  int n_;
  std::unique_ptr<Impl> impl_;
};

// Full 2D linear convolution via zero-padded FFTs:
// result is (a.rows+b.rows-1) x (a.cols+b.cols-1).
Matrix fft_convolve_full(const Matrix& a, const Matrix& b);

inline int next_pow2(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

}  // namespace gaborfeat
