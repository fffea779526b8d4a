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

#include "evkit/transforms.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "evkit/error.hpp"

namespace evkit
{
namespace
{
void check_turns(int quarter_turns)
{
  if (quarter_turns < 0 || quarter_turns > 3) {
    throw InvalidArgument("quarter_turns must be 0..3, got " + std::to_string(quarter_turns));
  }
}

struct Rotation
{
  Dims src;
  int turns;

  Dims dims() const
  {
    return (turns % 2 == 0) ? src : Dims{src.height, src.width};
  }

  // Composition of `turns` single turns (x, y) -> (h - 1 - y, x).
  void apply(std::uint16_t & x, std::uint16_t & y) const
  {
    const auto w = src.width;
    const auto h = src.height;
    switch (turns) {
      case 1: {
        const std::uint16_t nx = static_cast<std::uint16_t>(h - 1 - y);
        y = x;
        x = nx;
        break;
      }
      case 2:
        x = static_cast<std::uint16_t>(w - 1 - x);
        y = static_cast<std::uint16_t>(h - 1 - y);
        break;
      case 3: {
        const std::uint16_t nx = y;
        y = static_cast<std::uint16_t>(w - 1 - x);
        x = nx;
        break;
      }
      default:
        break;
    }
  }
};

template <typename T>
std::vector<T> rotate_raster(Dims dims, std::span<const T> values, int quarter_turns)
{
  const Rotation rot{dims, quarter_turns};
  const Dims out_dims = rot.dims();
  std::vector<T> out(values.size());
  for (std::uint16_t y = 0; y < dims.height; ++y) {
    for (std::uint16_t x = 0; x < dims.width; ++x) {
      std::uint16_t rx = x;
      std::uint16_t ry = y;
      rot.apply(rx, ry);
      out[out_dims.index(rx, ry)] = values[dims.index(x, y)];
    }
  }
  return out;
}
}  // namespace

EventStream slice_by_time(const EventStream & stream, std::uint64_t t0, std::uint64_t t1)
{
  if (t0 > t1) {
    throw InvalidArgument(
      "slice_by_time: t0=" + std::to_string(t0) + " after t1=" + std::to_string(t1));
  }
  const auto ev = stream.events();
  const auto by_time = [](const Event & e, std::uint64_t t) { return e.t < t; };
  const auto first = std::lower_bound(ev.begin(), ev.end(), t0, by_time);
  const auto last = std::lower_bound(first, ev.end(), t1, by_time);
  return EventStream(stream.dims(), Window{t0, t1}, std::vector<Event>(first, last));
}

EventStream reverse_stream(const EventStream & stream)
{
  const std::uint64_t pivot_lo = stream.t_start();
  const std::uint64_t pivot_hi = stream.t_end();
  const auto ev = stream.events();
  std::vector<Event> out;
  out.reserve(ev.size());
  // walking backwards keeps timestamps non-decreasing without a sort
  for (auto it = ev.rbegin(); it != ev.rend(); ++it) {
    Event e = *it;
    e.t = pivot_lo + (pivot_hi - e.t);
    e.p = static_cast<std::int8_t>(-e.p);
    out.push_back(e);
  }
  return EventStream(stream.dims(), stream.window(), std::move(out));
}

EventStream rotate90(const EventStream & stream, int quarter_turns)
{
  check_turns(quarter_turns);
  const Rotation rot{stream.dims(), quarter_turns};
  std::vector<Event> out(stream.events().begin(), stream.events().end());
  for (Event & e : out) {
    rot.apply(e.x, e.y);
  }
  return EventStream(rot.dims(), stream.window(), std::move(out));
}

ChannelField rotate90(const ChannelField & field, int quarter_turns)
{
  check_turns(quarter_turns);
  const Rotation rot{field.dims(), quarter_turns};
  return ChannelField(
    rot.dims(), field.kind(), rotate_raster(field.dims(), field.values(), quarter_turns));
}

Frame rotate90(const Frame & frame, int quarter_turns)
{
  check_turns(quarter_turns);
  const Rotation rot{frame.dims(), quarter_turns};
  return Frame(rot.dims(), frame.t(), rotate_raster(frame.dims(), frame.values(), quarter_turns));
}

EventStream shift_time(const EventStream & stream, std::uint64_t offset)
{
  if (stream.t_end() > std::numeric_limits<std::uint64_t>::max() - offset) {
    throw InvalidArgument("shift_time: timestamp overflow");
  }
  std::vector<Event> out(stream.events().begin(), stream.events().end());
  for (Event & e : out) {
    e.t += offset;
  }
  return EventStream(
    stream.dims(), Window{stream.t_start() + offset, stream.t_end() + offset}, std::move(out));
}

}  // namespace evkit
