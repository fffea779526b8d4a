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

#include <algorithm>
#include <cmath>

#include "evkit/simd/kernels.hpp"

namespace evkit::simd
{
namespace
{
double abs_diff_sum(const double * a, const double * b, std::size_t n)
{
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += std::fabs(a[i] - b[i]);
  }
  return s;
}

void min_max(const double * v, std::size_t n, double * lo, double * hi)
{
  double mn = v[0];
  double mx = v[0];
  for (std::size_t i = 1; i < n; ++i) {
    mn = std::min(mn, v[i]);
    mx = std::max(mx, v[i]);
  }
  *lo = mn;
  *hi = mx;
}

std::size_t clamp_unit(double * v, std::size_t n)
{
  std::size_t changed = 0;
  for (std::size_t i = 0; i < n; ++i) {
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

void quantize_unit_u8(const double * v, std::size_t n, std::uint8_t * out)
{
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::min(std::max(v[i], 0.0), 1.0);
    out[i] = static_cast<std::uint8_t>(std::nearbyint(c * 255.0));
  }
}

void normalize_u8(const double * v, std::size_t n, double lo, double scale, std::uint8_t * out)
{
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::min(std::max((v[i] - lo) * scale, 0.0), 255.0);
    out[i] = static_cast<std::uint8_t>(std::nearbyint(s));
  }
}

void narrow_f32(const double * v, std::size_t n, float * out)
{
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<float>(v[i]);
  }
}

void sqrt_ratio(const double * num, const double * den, std::size_t n, double * out)
{
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (num[i] > 0.0 && den[i] > 0.0) ? std::sqrt(num[i] / den[i]) : 0.0;
  }
}

}  // namespace

const KernelTable & scalar_kernels()
{
  static const KernelTable table{
    Isa::scalar,  abs_diff_sum, min_max, clamp_unit, quantize_unit_u8,
    normalize_u8, narrow_f32,   sqrt_ratio};
  return table;
}

}  // namespace evkit::simd
