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

#ifndef EVKIT_EVENT_HPP
#define EVKIT_EVENT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace evkit
{
/// Sensor geometry shared by streams, frames and channel fields.
struct Dims
{
  std::uint16_t width{0};
  std::uint16_t height{0};

  std::size_t pixels() const { return static_cast<std::size_t>(width) * height; }
  std::size_t index(std::size_t x, std::size_t y) const { return y * width + x; }
  bool contains(std::size_t x, std::size_t y) const { return x < width && y < height; }
  bool operator==(const Dims &) const = default;
};

/// One brightness-change record. Timestamps are integer microseconds.
struct Event
{
  std::uint64_t t{0};
  std::uint16_t x{0};
  std::uint16_t y{0};
  std::int8_t p{1};  // -1 or +1

  bool operator==(const Event &) const = default;
};

/// Closed time window [t_start, t_end] in microseconds.
struct Window
{
  std::uint64_t t_start{0};
  std::uint64_t t_end{0};

  std::uint64_t duration() const { return t_end - t_start; }
  bool operator==(const Window &) const = default;
};

/// Validated, time-ordered event sequence on a fixed sensor.
///
/// Invariants (checked on construction, InvalidArgument otherwise):
/// events are sorted by non-decreasing t, every event lies inside the
/// window and the sensor, and every polarity is -1 or +1.
class EventStream
{
public:
  EventStream() = default;
  EventStream(Dims dims, Window window, std::vector<Event> events);

  /// Empty stream on the given sensor.
  EventStream(Dims dims, Window window) : EventStream(dims, window, {}) {}

  Dims dims() const { return dims_; }
  std::uint16_t width() const { return dims_.width; }
  std::uint16_t height() const { return dims_.height; }
  Window window() const { return window_; }
  std::uint64_t t_start() const { return window_.t_start; }
  std::uint64_t t_end() const { return window_.t_end; }

  std::span<const Event> events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  /// Moves the event storage out; the stream is left empty.
  std::vector<Event> release() &&;

  bool operator==(const EventStream &) const = default;

private:
  Dims dims_{};
  Window window_{};
  std::vector<Event> events_;
};

/// Stable sort by timestamp; the only ordering every operation relies on.
void sort_by_time(std::vector<Event> & events);

}  // namespace evkit
#endif  // EVKIT_EVENT_HPP
