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

#include <cstdlib>
#include <string_view>

#include "evkit/error.hpp"
#include "evkit/simd/kernels.hpp"

namespace evkit::simd
{
#if defined(EVKIT_HAS_AVX2)
const KernelTable & avx2_kernel_table();
#endif

std::string_view to_string(Isa isa)
{
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable * avx2_kernels()
{
#if defined(EVKIT_HAS_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace
{
const KernelTable & select()
{
  const char * env = std::getenv("EVKIT_SIMD");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") {
    return scalar_kernels();
  }
  if (want == "avx2") {
    if (const KernelTable * t = avx2_kernels()) {
      return *t;
    }
    throw Error("EVKIT_SIMD=avx2 requested but AVX2 is unavailable");
  }
  if (const KernelTable * t = avx2_kernels()) {
    return *t;
  }
  return scalar_kernels();
}
}  // namespace

const KernelTable & kernels()
{
  static const KernelTable & table = select();
  return table;
}

double abs_diff_sum(std::span<const double> a, std::span<const double> b)
{
  if (a.size() != b.size()) {
    throw InvalidArgument("abs_diff_sum: length mismatch");
  }
  return kernels().abs_diff_sum(a.data(), b.data(), a.size());
}

std::size_t clamp_unit(std::span<double> v) { return kernels().clamp_unit(v.data(), v.size()); }

}  // namespace evkit::simd
