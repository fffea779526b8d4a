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

#include "evkit/noise.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "evkit/error.hpp"

namespace evkit
{
void NoiseConfig::validate() const
{
  const auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!finite_nonneg(ba_rate)) throw InvalidArgument("noise: ba_rate must be >= 0");
  if (!(hole_prob >= 0.0 && hole_prob <= 1.0)) throw InvalidArgument("noise: hole_prob must be in [0, 1]");
  if (!finite_nonneg(jitter_std)) throw InvalidArgument("noise: jitter_std must be >= 0");
  if (!finite_nonneg(count_dispersion)) throw InvalidArgument("noise: count_dispersion must be >= 0");
}

bool NoiseConfig::is_identity() const
{
  return ba_rate == 0.0 && hole_prob == 0.0 && jitter_std == 0.0 && count_dispersion == 0.0;
}

EventStream inject_noise(const EventStream & stream, const NoiseConfig & config)
{
  config.validate();
  if (config.is_identity()) {
    return stream;
  }
  std::mt19937_64 rng(config.seed);
  const Window w = stream.window();
  std::vector<Event> events(stream.events().begin(), stream.events().end());

  if (config.hole_prob > 0.0) {
    std::bernoulli_distribution drop(config.hole_prob);
    std::erase_if(events, [&](const Event &) { return drop(rng); });
  }

  if (config.count_dispersion > 0.0 && !events.empty()) {
    // Group event indices by pixel; pixels are visited in raster order so the
    // random draws do not depend on event order.
    const Dims dims = stream.dims();
    std::vector<std::uint32_t> start(dims.pixels() + 1, 0);
    for (const Event & e : events) ++start[dims.index(e.x, e.y) + 1];
    for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
    std::vector<std::uint32_t> order(events.size());
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::uint32_t i = 0; i < events.size(); ++i) {
      order[fill[dims.index(events[i].x, events[i].y)]++] = i;
    }

    std::bernoulli_distribution perturb(std::min(1.0, config.count_dispersion));
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> removed(events.size(), false);
    std::vector<Event> extra;
    for (std::size_t px = 0; px < dims.pixels(); ++px) {
      const std::uint32_t n = start[px + 1] - start[px];
      if (n == 0 || !perturb(rng)) continue;
      std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
      const std::uint32_t victim = order[start[px] + pick(rng)];
      if (coin(rng)) {
        Event copy = events[victim];
        if (coin(rng)) {
          copy.t = copy.t < w.t_end ? copy.t + 1 : copy.t;
        } else {
          copy.t = copy.t > w.t_start ? copy.t - 1 : copy.t;
        }
        extra.push_back(copy);
      } else {
        removed[victim] = true;
      }
    }
    std::vector<Event> kept;
    kept.reserve(events.size() + extra.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (!removed[i]) kept.push_back(events[i]);
    }
    kept.insert(kept.end(), extra.begin(), extra.end());
    events = std::move(kept);
  }

  if (config.jitter_std > 0.0) {
    std::normal_distribution<double> jitter(0.0, config.jitter_std);
    const double lo = static_cast<double>(w.t_start);
    const double hi = static_cast<double>(w.t_end);
    for (Event & e : events) {
      const double t = std::clamp(std::nearbyint(static_cast<double>(e.t) + jitter(rng)), lo, hi);
      e.t = std::clamp(static_cast<std::uint64_t>(t), w.t_start, w.t_end);
    }
  }

  if (config.ba_rate > 0.0 && w.duration() > 0) {
    const double mean = config.ba_rate * static_cast<double>(w.duration()) * 1e-6;
    std::poisson_distribution<std::uint64_t> count(mean);
    std::uniform_int_distribution<std::uint64_t> when(w.t_start, w.t_end);
    std::bernoulli_distribution positive(0.5);
    const Dims dims = stream.dims();
    for (std::uint16_t y = 0; y < dims.height; ++y) {
      for (std::uint16_t x = 0; x < dims.width; ++x) {
        const std::uint64_t n = count(rng);
        for (std::uint64_t i = 0; i < n; ++i) {
          const std::uint64_t t = when(rng);
          events.push_back(Event{t, x, y, static_cast<std::int8_t>(positive(rng) ? 1 : -1)});
        }
      }
    }
  }

  sort_by_time(events);
  return EventStream(stream.dims(), w, std::move(events));
}

}  // namespace evkit
