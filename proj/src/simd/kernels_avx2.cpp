// Copyright 2026 The evkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Built with -mavx2 only; dispatch.cpp guards every call with a CPU check.
// No FMA here: contraction would break bit-equality with the scalar table.

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include "evkit/simd/kernels.hpp"

namespace evkit::simd
{
namespace
{
double abs_diff_sum(const double * a, const double * b, std::size_t n)
{
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
    acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(sign, d0));
    acc1 = _mm256_add_pd(acc1, _mm256_andnot_pd(sign, d1));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(sign, d));
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc0);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    s += std::fabs(a[i] - b[i]);
  }
  return s;
}

void min_max(const double * v, std::size_t n, double * lo, double * hi)
{
  std::size_t i = 0;
  double mn = v[0];
  double mx = v[0];
  if (n >= 4) {
    __m256d vmin = _mm256_loadu_pd(v);
    __m256d vmax = vmin;
    for (i = 4; i + 4 <= n; i += 4) {
      const __m256d x = _mm256_loadu_pd(v + i);
      // operand order mirrors std::min/std::max tie handling
      vmin = _mm256_min_pd(x, vmin);
      vmax = _mm256_max_pd(x, vmax);
    }
    alignas(32) double a[4];
    alignas(32) double b[4];
    _mm256_store_pd(a, vmin);
    _mm256_store_pd(b, vmax);
    mn = a[0];
    mx = b[0];
    for (int k = 1; k < 4; ++k) {
      mn = std::min(mn, a[k]);
      mx = std::max(mx, b[k]);
    }
  } else {
    i = 1;
  }
  for (; i < n; ++i) {
    mn = std::min(mn, v[i]);
    mx = std::max(mx, v[i]);
  }
  *lo = mn;
  *hi = mx;
}

std::size_t clamp_unit(double * v, std::size_t n)
{
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t changed = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    const __m256d below = _mm256_cmp_pd(x, zero, _CMP_LT_OQ);
    const __m256d above = _mm256_cmp_pd(x, one, _CMP_GT_OQ);
    const int mask = _mm256_movemask_pd(_mm256_or_pd(below, above));
    if (mask != 0) {
      changed += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
      __m256d y = _mm256_blendv_pd(x, zero, below);
      y = _mm256_blendv_pd(y, one, above);
      _mm256_storeu_pd(v + i, y);
    }
  }
  for (; i < n; ++i) {
    if (v[i] < 0.0) {
      v[i] = 0.0;
      ++changed;
    } else if (v[i] > 1.0) {
      v[i] = 1.0;
      ++changed;
    }
  }
  return changed;
}

// Converts 4 doubles already rounded to integers in [0, 255] into bytes.
inline void store4_u8(__m256d r, std::uint8_t * out)
{
  const __m128i i32 = _mm256_cvtpd_epi32(r);
  const __m128i i16 = _mm_packus_epi32(i32, i32);
  const __m128i u8 = _mm_packus_epi16(i16, i16);
  const int packed = _mm_cvtsi128_si32(u8);
  std::memcpy(out, &packed, 4);
}

void quantize_unit_u8(const double * v, std::size_t n, std::uint8_t * out)
{
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d k255 = _mm256_set1_pd(255.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(v + i);
    x = _mm256_min_pd(_mm256_max_pd(x, zero), one);
    x = _mm256_round_pd(_mm256_mul_pd(x, k255), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    store4_u8(x, out + i);
  }
  for (; i < n; ++i) {
    const double c = std::min(std::max(v[i], 0.0), 1.0);
    out[i] = static_cast<std::uint8_t>(std::nearbyint(c * 255.0));
  }
}

void normalize_u8(const double * v, std::size_t n, double lo, double scale, std::uint8_t * out)
{
  const __m256d zero = _mm256_setzero_pd();
  const __m256d k255 = _mm256_set1_pd(255.0);
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vscale = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(v + i), vlo), vscale);
    x = _mm256_min_pd(_mm256_max_pd(x, zero), k255);
    x = _mm256_round_pd(x, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    store4_u8(x, out + i);
  }
  for (; i < n; ++i) {
    const double s = std::min(std::max((v[i] - lo) * scale, 0.0), 255.0);
    out[i] = static_cast<std::uint8_t>(std::nearbyint(s));
  }
}

void narrow_f32(const double * v, std::size_t n, float * out)
{
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm_storeu_ps(out + i, _mm256_cvtpd_ps(_mm256_loadu_pd(v + i)));
  }
  for (; i < n; ++i) {
    out[i] = static_cast<float>(v[i]);
  }
}

void sqrt_ratio(const double * num, const double * den, std::size_t n, double * out)
{
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(num + i);
    const __m256d b = _mm256_loadu_pd(den + i);
    const __m256d ok = _mm256_and_pd(_mm256_cmp_pd(a, zero, _CMP_GT_OQ), _mm256_cmp_pd(b, zero, _CMP_GT_OQ));
    // masked lanes may hold inf or NaN; the AND zeroes them
    const __m256d r = _mm256_sqrt_pd(_mm256_div_pd(a, b));
    _mm256_storeu_pd(out + i, _mm256_and_pd(r, ok));
  }
  for (; i < n; ++i) {
    out[i] = (num[i] > 0.0 && den[i] > 0.0) ? std::sqrt(num[i] / den[i]) : 0.0;
  }
}

}  // namespace

const KernelTable & avx2_kernel_table()
{
  static const KernelTable table{
    Isa::avx2,    abs_diff_sum, min_max, clamp_unit, quantize_unit_u8,
    normalize_u8, narrow_f32,   sqrt_ratio};
  return table;
}

}  // namespace evkit::simd
