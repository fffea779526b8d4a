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

#ifndef EVKIT_NOISE_HPP
#define EVKIT_NOISE_HPP

#include <cstdint>

#include "evkit/event.hpp"

namespace evkit
{
/// Parameters of the four random corruptions a real sensor adds to a stream.
struct NoiseConfig
{
  double ba_rate{0.0};           // background activity, events / pixel / second
  double hole_prob{0.0};         // probability of dropping each true event
  double jitter_std{0.0};        // timestamp jitter, microseconds
  double count_dispersion{0.0};  // per-pixel probability of one extra/missing event
  std::uint64_t seed{0};

  /// Throws InvalidArgument when a rate or probability is out of range.
  void validate() const;
  bool is_identity() const;
};

/// Applies, in order: holes, count dispersion, timestamp jitter (rounded,
/// clamped to the window) and background activity (homogeneous Poisson per
/// pixel, uniform polarity). The result is stably re-sorted and is a pure
/// function of (stream, config): same seed, same bytes.
EventStream inject_noise(const EventStream & stream, const NoiseConfig & config);

}  // namespace evkit
#endif  // EVKIT_NOISE_HPP
