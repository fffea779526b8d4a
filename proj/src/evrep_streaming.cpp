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
#include <vector>

#include "evkit/evrep.hpp"
#include "evkit/parallel.hpp"
#include "evkit/simd/kernels.hpp"

namespace evkit
{
namespace
{
using u128 = unsigned __int128;

// Sum of squared intervals never overflows: sum(d^2) <= (sum d)^2 <= span^2 < 2^128.
struct alignas(16) Moments
{
  u128 sum_sq{0};
  std::uint64_t sum{0};
  std::uint64_t last_t{0};
  std::uint32_t count{0};
  std::int32_t polarity{0};
};

inline void accumulate(Moments & m, const Event & e)
{
  if (m.count != 0) {
    const std::uint64_t d = e.t - m.last_t;
    m.sum += d;
    m.sum_sq += static_cast<u128>(d) * d;
  }
  m.last_t = e.t;
  ++m.count;
  m.polarity += e.p;
}

// Writes E_T^2 as num / den. Exact integer numerators:
//   literal:      n^2 S2 - (n+1) S1^2   over  n^2 (n-1)
//   conventional: (n-1) S2 - S1^2       over  (n-1) (n-2)
void spread_ratio(const Moments & m, TemporalMode mode, double & num, double & den)
{
  num = 0.0;
  den = 0.0;
  const u128 n = m.count;
  if (n < 2) return;
  const u128 s1 = m.sum;
  const u128 s2 = m.sum_sq;
  u128 a = 0;
  u128 b = 0;
  u128 s1sq = 0;
  bool overflow = __builtin_mul_overflow(s1, s1, &s1sq);
  if (mode == TemporalMode::literal) {
    overflow = overflow || __builtin_mul_overflow(n * n, s2, &a);
    overflow = overflow || __builtin_mul_overflow(n + 1, s1sq, &b);
    den = static_cast<double>(n * n) * static_cast<double>(n - 1);
  } else {
    if (n < 3) return;
    overflow = overflow || __builtin_mul_overflow(n - 1, s2, &a);
    b = s1sq;
    den = static_cast<double>(n - 1) * static_cast<double>(n - 2);
  }
  if (!overflow) {
    num = a > b ? static_cast<double>(a - b) : 0.0;
    return;
  }
  // Only reachable with spans near 2^64 us; long double keeps it usable.
  const long double ln = static_cast<long double>(m.count);
  const long double ls1 = static_cast<long double>(m.sum);
  const long double ls2 = static_cast<long double>(m.sum_sq);
  const long double mean = mode == TemporalMode::literal ? ls1 / ln : ls1 / (ln - 1);
  const long double ss = std::max(0.0L, ls2 - 2 * mean * ls1 + (ln - 1) * mean * mean);
  num = static_cast<double>(ss);
  den = mode == TemporalMode::literal ? static_cast<double>(ln - 1) : static_cast<double>(ln - 2);
}
}  // namespace

EvRep compute_evrep_streaming(const EventStream & stream, TemporalMode mode, std::size_t workers)
{
  const Dims dims = stream.dims();
  const std::size_t npx = dims.pixels();
  std::vector<Moments> acc(npx);
  const auto events = stream.events();

  if (workers == 0) workers = worker_count();
  // Bands of rows; below ~64k events per worker the extra scans cost more than they save.
  workers = std::min<std::size_t>({workers, dims.height, std::max<std::size_t>(1, events.size() >> 16)});
  if (workers <= 1) {
    for (const Event & e : events) {
      accumulate(acc[dims.index(e.x, e.y)], e);
    }
  } else {
    parallel_for(dims.height, workers, [&](std::size_t row_begin, std::size_t row_end) {
      for (const Event & e : events) {
        if (e.y >= row_begin && e.y < row_end) {
          accumulate(acc[dims.index(e.x, e.y)], e);
        }
      }
    });
  }

  std::vector<double> e_c(npx);
  std::vector<double> e_i(npx);
  std::vector<double> num(npx);
  std::vector<double> den(npx);
  for (std::size_t i = 0; i < npx; ++i) {
    e_c[i] = acc[i].count;
    e_i[i] = acc[i].polarity;
    spread_ratio(acc[i], mode, num[i], den[i]);
  }
  std::vector<double> e_t(npx);
  if (npx > 0) {
    simd::kernels().sqrt_ratio(num.data(), den.data(), npx, e_t.data());
  }
  return EvRep{
    ChannelField(dims, ChannelKind::integral, std::move(e_i)),
    ChannelField(dims, ChannelKind::count, std::move(e_c)),
    ChannelField(dims, ChannelKind::temporal, std::move(e_t))};
}

}  // namespace evkit
