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

#ifndef EVKIT_TRANSFORMS_HPP
#define EVKIT_TRANSFORMS_HPP

#include <cstdint>

#include "evkit/channel.hpp"
#include "evkit/event.hpp"
#include "evkit/frame.hpp"

namespace evkit
{
/// Events with t0 <= t < t1; the result's window is [t0, t1]. Half-open so
/// that consecutive frame intervals partition a stream.
EventStream slice_by_time(const EventStream & stream, std::uint64_t t0, std::uint64_t t1);

/// Time reversal inside the window: (t, x, y, p) -> (t0 + t1 - t, x, y, -p).
/// Exact involution, including the order of simultaneous events.
EventStream reverse_stream(const EventStream & stream);

/// Rotates by quarter_turns * 90 degrees. One turn maps (x, y) to
/// (height - 1 - y, x) and swaps width and height.
EventStream rotate90(const EventStream & stream, int quarter_turns);
ChannelField rotate90(const ChannelField & field, int quarter_turns);
Frame rotate90(const Frame & frame, int quarter_turns);

/// Adds `offset` to every timestamp and to the window.
EventStream shift_time(const EventStream & stream, std::uint64_t offset);

}  // namespace evkit
#endif  // EVKIT_TRANSFORMS_HPP
