// core/src/fft.cpp

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

#include "gaborfeat/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace gaborfeat {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct RealFft1d::Impl {
  fftw_plan plan = nullptr;
  double* in = nullptr;
  fftw_complex* out = nullptr;
};

RealFft1d::RealFft1d(int n) : n_(n), impl_(std::make_unique<Impl>()) {
  if (n <= 0) throw std::invalid_argument("RealFft1d: size must be positive");
  impl_->in = fftw_alloc_real(n);
  impl_->out = fftw_alloc_complex(n / 2 + 1);
  std::lock_guard<std::mutex> lock(planner_mutex());
  impl_->plan =
      fftw_plan_dft_r2c_1d(n, impl_->in, impl_->out, FFTW_ESTIMATE);
}

RealFft1d::~RealFft1d() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (impl_->plan) fftw_destroy_plan(impl_->plan);
  fftw_free(impl_->in);
  fftw_free(impl_->out);
}

void RealFft1d::forward(const double* in, std::complex<double>* out) const {
  std::memcpy(impl_->in, in, sizeof(double) * n_);
  fftw_execute(impl_->plan);
  std::memcpy(out, impl_->out, sizeof(fftw_complex) * (n_ / 2 + 1));
}

Matrix fft_convolve_full(const Matrix& a, const Matrix& b) {
  const int out_rows = a.rows() + b.rows() - 1;
  const int out_cols = a.cols() + b.cols() - 1;
  const int fr = next_pow2(out_rows);
  const int fc = next_pow2(out_cols);
  const int cc = fc / 2 + 1;

  double* buf_a = fftw_alloc_real(static_cast<size_t>(fr) * fc);
  double* buf_b = fftw_alloc_real(static_cast<size_t>(fr) * fc);
  fftw_complex* spec_a = fftw_alloc_complex(static_cast<size_t>(fr) * cc);
  fftw_complex* spec_b = fftw_alloc_complex(static_cast<size_t>(fr) * cc);

  std::memset(buf_a, 0, sizeof(double) * fr * fc);
  std::memset(buf_b, 0, sizeof(double) * fr * fc);
  for (int r = 0; r < a.rows(); ++r)
    std::memcpy(buf_a + static_cast<size_t>(r) * fc, a.row(r),
                sizeof(double) * a.cols());
  for (int r = 0; r < b.rows(); ++r)
    std::memcpy(buf_b + static_cast<size_t>(r) * fc, b.row(r),
                sizeof(double) * b.cols());

  fftw_plan fwd_a, fwd_b, bwd;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_a = fftw_plan_dft_r2c_2d(fr, fc, buf_a, spec_a, FFTW_ESTIMATE);
    fwd_b = fftw_plan_dft_r2c_2d(fr, fc, buf_b, spec_b, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_2d(fr, fc, spec_a, buf_a, FFTW_ESTIMATE);
  }
  fftw_execute(fwd_a);
  fftw_execute(fwd_b);

  const double scale = 1.0 / (static_cast<double>(fr) * fc);
  for (size_t i = 0; i < static_cast<size_t>(fr) * cc; ++i) {
    const double re =
        spec_a[i][0] * spec_b[i][0] - spec_a[i][1] * spec_b[i][1];
    const double im =
        spec_a[i][0] * spec_b[i][1] + spec_a[i][1] * spec_b[i][0];
    spec_a[i][0] = re * scale;
    spec_a[i][1] = im * scale;
  }
  fftw_execute(bwd);

  Matrix out(out_rows, out_cols);
  for (int r = 0; r < out_rows; ++r)
    std::memcpy(out.row(r), buf_a + static_cast<size_t>(r) * fc,
                sizeof(double) * out_cols);

  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd_a);
    fftw_destroy_plan(fwd_b);
    fftw_destroy_plan(bwd);
  }
  fftw_free(buf_a);
  fftw_free(buf_b);
  fftw_free(spec_a);
  fftw_free(spec_b);
  return out;
}

}  // namespace gaborfeat
