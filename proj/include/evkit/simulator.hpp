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

#ifndef EVKIT_SIMULATOR_HPP
#define EVKIT_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "evkit/event.hpp"
#include "evkit/frame.hpp"
#include "evkit/frame_event.hpp"
#include "evkit/noise.hpp"

namespace evkit
{
enum class TimingMode {
  uniform,       // n events evenly spaced strictly inside the interval
  leading_edge,  // t0 + 1, t0 + 2, ... (capped at t1 - 1)
};

struct TimingModel
{
  TimingMode mode{TimingMode::uniform};
  /// Applied to the generated stream when set (seeded, deterministic).
  std::optional<NoiseConfig> noise;
};

/// Threshold-crossing event generation for one frame interval [t0, t1].
///
/// Per pixel: d = ln((f1 + k) / (f0 + k)), n = floor(|d| / theta) events of
/// polarity sign(d). The residual d - sign(d) n theta stays below theta in
/// magnitude. Quotients within 1e-9 of an integer are snapped up so that
/// exact multiples of theta survive rounding in ln().
///
/// Emitted timestamps lie in [t0, t1), so slice_by_time(t0, t1) recovers
/// exactly this interval's events.
EventStream simulate_pair(
  const Frame & f0, const Frame & f1, const CameraModel & model, std::uint64_t t0,
  std::uint64_t t1, const TimingModel & timing = {});

/// simulate_pair over consecutive frames (using their timestamps), each
/// interval quantized independently; window spans first to last frame.
EventStream simulate_sequence(
  std::span<const Frame> frames, const CameraModel & model, const TimingModel & timing = {});

}  // namespace evkit
#endif  // EVKIT_SIMULATOR_HPP
