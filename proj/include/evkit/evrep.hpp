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

#ifndef EVKIT_EVREP_HPP
#define EVKIT_EVREP_HPP

#include <cstddef>

#include "evkit/channel.hpp"
#include "evkit/event.hpp"

namespace evkit
{
/// How the mean inter-event interval is formed for E_T.
///
/// With n events at a pixel there are n - 1 intervals d_0..d_{n-2}.
///  - literal:      mean = sum(d) / n,       E_T = sqrt(sum (d - mean)^2 / (n - 1))
///  - conventional: mean = sum(d) / (n - 1), E_T = sqrt(sum (d - mean)^2 / (n - 2))
///    i.e. the sample standard deviation of the intervals (0 when n == 2).
/// literal is the default. The modes coincide on some inputs ([0, 10, 30]) and
/// differ on evenly spaced events. Pixels with n < 2 are 0 in both modes.
enum class TemporalMode { literal, conventional };

/// {E_I, E_C, E_T}: polarity integral, event count, interval spread.
struct EvRep
{
  ChannelField e_i;
  ChannelField e_c;
  ChannelField e_t;

  Dims dims() const { return e_c.dims(); }
  bool operator==(const EvRep &) const = default;
};

ChannelField compute_e_c(const EventStream & stream);
ChannelField compute_e_i(const EventStream & stream);
ChannelField compute_e_t(const EventStream & stream, TemporalMode mode = TemporalMode::literal);

/// Reference path: groups each pixel's events into its own list, then
/// evaluates the three channels directly from their definitions.
EvRep compute_evrep(const EventStream & stream, TemporalMode mode = TemporalMode::literal);

/// Single pass over the events keeping, per pixel, the count, polarity sum,
/// last timestamp and exact integer sums of intervals and squared intervals.
/// E_C and E_I match compute_evrep exactly; E_T to ~1e-15 relative.
///
/// Rows are split into bands handled by independent workers (each worker
/// owns whole pixels, so no merge arithmetic is needed); results do not
/// depend on `workers`. workers == 0 means worker_count().
EvRep compute_evrep_streaming(
  const EventStream & stream, TemporalMode mode = TemporalMode::literal, std::size_t workers = 0);

}  // namespace evkit
#endif  // EVKIT_EVREP_HPP
