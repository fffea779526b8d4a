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

#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "evkit/error.hpp"
#include "evkit/simd/kernels.hpp"

using namespace evkit::simd;

namespace
{
// Mixture of ordinary values, exact rounding ties, out-of-range values and
// signed zeros: the cases where vector and scalar code tend to diverge.
std::vector<double> awkward(std::mt19937_64 & rng, std::size_t n)
{
  std::uniform_real_distribution<double> wide(-2.0, 3.0);
  std::uniform_int_distribution<int> tie(0, 255);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (rng() % 8) {
      case 0: v[i] = (tie(rng) + 0.5) / 255.0; break;
      case 1: v[i] = -0.0; break;
      case 2: v[i] = 1.0; break;
      case 3: v[i] = std::numeric_limits<double>::denorm_min(); break;
      case 4: v[i] = 1e300 * (rng() % 2 ? 1 : -1); break;
      default: v[i] = wide(rng); break;
    }
  }
  return v;
}

bool same_bits(double a, double b)
{
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

const std::vector<std::size_t> kSizes{1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 32, 33, 63, 64, 65, 1000, 4099};
}  // namespace

TEST_CASE("scalar kernels: reference behavior")
{
  const KernelTable & k = scalar_kernels();
  std::vector<double> v{-0.5, 0.25, 1.5, 1.0};
  CHECK(k.clamp_unit(v.data(), v.size()) == 2);
  CHECK(v == std::vector<double>{0.0, 0.25, 1.0, 1.0});

  const std::vector<double> a{1.0, -2.0, 3.5};
  const std::vector<double> b{0.5, 2.0, 3.5};
  CHECK(k.abs_diff_sum(a.data(), b.data(), 3) == 4.5);

  double lo = 0;
  double hi = 0;
  k.min_max(a.data(), a.size(), &lo, &hi);
  CHECK(lo == -2.0);
  CHECK(hi == 3.5);

  const std::vector<double> q{0.5, 1.5 / 255.0, 2.0, -1.0};
  std::vector<std::uint8_t> out(4);
  k.quantize_unit_u8(q.data(), q.size(), out.data());
  CHECK(out == std::vector<std::uint8_t>{128, 2, 255, 0});

  const std::vector<double> num{4.0, 0.0, -1.0, 9.0};
  const std::vector<double> den{1.0, 5.0, 2.0, 0.0};
  std::vector<double> r(4);
  k.sqrt_ratio(num.data(), den.data(), 4, r.data());
  CHECK(r == std::vector<double>{2.0, 0.0, 0.0, 0.0});
}

TEST_CASE("span helpers")
{
  const std::vector<double> a{1.0, 2.0};
  const std::vector<double> b{1.0};
  CHECK_THROWS_AS(abs_diff_sum(a, b), evkit::InvalidArgument);
  std::vector<double> c{2.0, -3.0, 0.5};
  CHECK(clamp_unit(c) == 2);
}

TEST_CASE("AVX2 kernels match scalar")
{
  const KernelTable * vec = avx2_kernels();
  if (vec == nullptr) {
    MESSAGE("AVX2 variant not available on this machine; nothing to compare");
    return;
  }
  const KernelTable & ref = scalar_kernels();
  std::mt19937_64 rng(31);

  for (const std::size_t n : kSizes) {
    CAPTURE(n);
    const std::vector<double> a = awkward(rng, n);
    const std::vector<double> b = awkward(rng, n);

    // abs_diff_sum: different summation order, so relative agreement
    std::vector<double> ua(n);
    std::vector<double> ub(n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      ua[i] = unit(rng);
      ub[i] = unit(rng);
    }
    const double s0 = ref.abs_diff_sum(ua.data(), ub.data(), n);
    const double s1 = vec->abs_diff_sum(ua.data(), ub.data(), n);
    CHECK(std::fabs(s0 - s1) <= 1e-12 * std::max(1.0, s0));

    double lo0 = 0, hi0 = 0, lo1 = 0, hi1 = 0;
    ref.min_max(a.data(), n, &lo0, &hi0);
    vec->min_max(a.data(), n, &lo1, &hi1);
    CHECK(same_bits(lo0, lo1));
    CHECK(same_bits(hi0, hi1));

    std::vector<double> c0 = a;
    std::vector<double> c1 = a;
    CHECK(ref.clamp_unit(c0.data(), n) == vec->clamp_unit(c1.data(), n));
    CHECK(std::memcmp(c0.data(), c1.data(), n * sizeof(double)) == 0);

    std::vector<std::uint8_t> q0(n);
    std::vector<std::uint8_t> q1(n);
    ref.quantize_unit_u8(a.data(), n, q0.data());
    vec->quantize_unit_u8(a.data(), n, q1.data());
    CHECK(q0 == q1);

    ref.normalize_u8(a.data(), n, -0.25, 100.0, q0.data());
    vec->normalize_u8(a.data(), n, -0.25, 100.0, q1.data());
    CHECK(q0 == q1);

    std::vector<float> f0(n);
    std::vector<float> f1(n);
    ref.narrow_f32(a.data(), n, f0.data());
    vec->narrow_f32(a.data(), n, f1.data());
    CHECK(std::memcmp(f0.data(), f1.data(), n * sizeof(float)) == 0);

    std::vector<double> r0(n);
    std::vector<double> r1(n);
    ref.sqrt_ratio(a.data(), b.data(), n, r0.data());
    vec->sqrt_ratio(a.data(), b.data(), n, r1.data());
    CHECK(std::memcmp(r0.data(), r1.data(), n * sizeof(double)) == 0);
  }
}

TEST_CASE("AVX2 min_max keeps scalar tie semantics for signed zeros")
{
  const KernelTable * vec = avx2_kernels();
  if (vec == nullptr) return;
  for (const auto & v : {std::vector<double>{0.0, -0.0, 0.0, -0.0, 0.0, -0.0},
                         std::vector<double>{-0.0, 0.0, -0.0, 0.0, -0.0, 0.0, 0.0, -0.0, 0.0}}) {
    double lo0 = 0, hi0 = 0, lo1 = 0, hi1 = 0;
    scalar_kernels().min_max(v.data(), v.size(), &lo0, &hi0);
    vec->min_max(v.data(), v.size(), &lo1, &hi1);
    CHECK(same_bits(lo0, lo1));
    CHECK(same_bits(hi0, hi1));
  }
}

TEST_CASE("dispatch picks a table")
{
  const KernelTable & k = kernels();
  CHECK((k.isa == Isa::scalar || k.isa == Isa::avx2));
  MESSAGE("active kernels: " << std::string(to_string(k.isa)));
}
