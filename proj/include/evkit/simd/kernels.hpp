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

#ifndef EVKIT_SIMD_KERNELS_HPP
#define EVKIT_SIMD_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace evkit::simd
{
enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Data-parallel inner loops used across the library. Every entry has a
/// scalar reference; vector variants must match it bit-for-bit except
/// abs_diff_sum, whose summation order differs (relative 1e-12).
struct KernelTable
{
  Isa isa;

  /// sum |a[i] - b[i]|
  double (*abs_diff_sum)(const double * a, const double * b, std::size_t n);

  /// Minimum and maximum of n > 0 values.
  void (*min_max)(const double * v, std::size_t n, double * lo, double * hi);

  /// Clamps in place to [0, 1]; returns how many values changed.
  std::size_t (*clamp_unit)(double * v, std::size_t n);

  /// out[i] = round_half_even(clamp(v[i], 0, 1) * 255)
  void (*quantize_unit_u8)(const double * v, std::size_t n, std::uint8_t * out);

  /// out[i] = round_half_even(clamp((v[i] - lo) * scale, 0, 255))
  void (*normalize_u8)(
    const double * v, std::size_t n, double lo, double scale, std::uint8_t * out);

  /// Round-to-nearest narrowing to IEEE binary32.
  void (*narrow_f32)(const double * v, std::size_t n, float * out);

  /// out[i] = sqrt(num[i] / den[i]) where num > 0 and den > 0, else 0.
  void (*sqrt_ratio)(const double * num, const double * den, std::size_t n, double * out);
};

const KernelTable & scalar_kernels();

/// Null when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const KernelTable * avx2_kernels();

/// Table chosen once per process: the widest supported ISA, overridable
/// with EVKIT_SIMD=scalar|avx2|auto.
const KernelTable & kernels();

// Span conveniences over kernels().
double abs_diff_sum(std::span<const double> a, std::span<const double> b);
std::size_t clamp_unit(std::span<double> v);

}  // namespace evkit::simd
#endif  // EVKIT_SIMD_KERNELS_HPP
