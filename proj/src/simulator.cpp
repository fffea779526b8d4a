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

#include "evkit/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evkit/error.hpp"

namespace evkit
{
namespace
{
constexpr double kSnap = 1e-9;
constexpr std::uint64_t kMaxEventsPerPixel = 1u << 24;

void generate_interval(
  const Frame & f0, const Frame & f1, const CameraModel & model, std::uint64_t t0,
  std::uint64_t t1, TimingMode mode, std::vector<Event> & out)
{
  const Dims dims = f0.dims();
  const auto a = f0.values();
  const auto b = f1.values();
  const auto theta = model.theta().values();
  const double k = model.k();
  const std::uint64_t span = t1 - t0;

  for (std::uint16_t y = 0; y < dims.height; ++y) {
    for (std::uint16_t x = 0; x < dims.width; ++x) {
      const std::size_t i = dims.index(x, y);
      const double lo = a[i] + k;
      const double hi = b[i] + k;
      if (lo <= 0.0 || hi <= 0.0) {
        throw DomainError(x, y, "simulate: ln of zero intensity (f + k == 0)");
      }
      if (!(theta[i] > 0.0)) {
        throw DomainError(x, y, "simulate: threshold must be > 0");
      }
      const double delta = std::log(hi / lo);
      const double q = std::floor(std::fabs(delta) / theta[i] + kSnap);
      if (q <= 0.0) continue;
      if (q > static_cast<double>(kMaxEventsPerPixel)) {
        throw DomainError(x, y, "simulate: more than 2^24 events at one pixel");
      }
      const auto n = static_cast<std::uint64_t>(q);
      const std::int8_t p = delta > 0.0 ? 1 : -1;
      for (std::uint64_t j = 0; j < n; ++j) {
        std::uint64_t t = 0;
        if (mode == TimingMode::uniform) {
          const unsigned __int128 num = static_cast<unsigned __int128>(j + 1) * span;
          t = t0 + static_cast<std::uint64_t>(num / (n + 1));
        } else {
          t = std::min(t0 + 1 + j, t1 - 1);
        }
        out.push_back(Event{t, x, y, p});
      }
    }
  }
}

void check_interval(const Frame & f0, const Frame & f1, const CameraModel & model,
                    std::uint64_t t0, std::uint64_t t1)
{
  if (t0 >= t1) {
    throw InvalidArgument(
      "simulate: interval start " + std::to_string(t0) + " not before end " + std::to_string(t1));
  }
  if (f0.dims() != f1.dims() || f0.dims() != model.dims()) {
    throw InvalidArgument("simulate: frame and model dimensions differ");
  }
}
}  // namespace

EventStream simulate_pair(
  const Frame & f0, const Frame & f1, const CameraModel & model, std::uint64_t t0,
  std::uint64_t t1, const TimingModel & timing)
{
  check_interval(f0, f1, model, t0, t1);
  std::vector<Event> events;
  generate_interval(f0, f1, model, t0, t1, timing.mode, events);
  sort_by_time(events);
  EventStream out(f0.dims(), Window{t0, t1}, std::move(events));
  if (timing.noise) {
    out = inject_noise(out, *timing.noise);
  }
  return out;
}

EventStream simulate_sequence(
  std::span<const Frame> frames, const CameraModel & model, const TimingModel & timing)
{
  if (frames.size() < 2) {
    throw InvalidArgument("simulate_sequence: need at least 2 frames");
  }
  std::vector<Event> events;
  for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
    const Frame & f0 = frames[i];
    const Frame & f1 = frames[i + 1];
    if (f1.t() <= f0.t()) {
      throw InvalidArgument(
        "simulate_sequence: frame timestamps must strictly increase (frame " +
        std::to_string(i + 1) + ")");
    }
    check_interval(f0, f1, model, f0.t(), f1.t());
    std::vector<Event> chunk;
    generate_interval(f0, f1, model, f0.t(), f1.t(), timing.mode, chunk);
    sort_by_time(chunk);
    events.insert(events.end(), chunk.begin(), chunk.end());
  }
  EventStream out(
    frames.front().dims(), Window{frames.front().t(), frames.back().t()}, std::move(events));
  if (timing.noise) {
    out = inject_noise(out, *timing.noise);
  }
  return out;
}

}  // namespace evkit
