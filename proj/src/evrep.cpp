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

#include "evkit/evrep.hpp"

#include <cmath>
#include <vector>

namespace evkit
{
namespace
{
struct PixelHistory
{
  std::vector<std::uint64_t> times;
  std::int64_t polarity_sum{0};
};

std::vector<PixelHistory> group_by_pixel(const EventStream & stream)
{
  std::vector<PixelHistory> pixels(stream.dims().pixels());
  for (const Event & e : stream.events()) {
    PixelHistory & h = pixels[stream.dims().index(e.x, e.y)];
    h.times.push_back(e.t);
    h.polarity_sum += e.p;
  }
  return pixels;
}

double interval_spread(const std::vector<std::uint64_t> & times, TemporalMode mode)
{
  const std::size_t n = times.size();
  if (n < 2) {
    return 0.0;
  }
  const std::size_t intervals = n - 1;
  const std::size_t denom = mode == TemporalMode::literal ? n - 1 : n - 2;
  if (denom == 0) {
    return 0.0;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < intervals; ++i) {
    sum += static_cast<double>(times[i + 1] - times[i]);
  }
  const double mean = sum / static_cast<double>(mode == TemporalMode::literal ? n : intervals);
  double ss = 0.0;
  for (std::size_t i = 0; i < intervals; ++i) {
    const double d = static_cast<double>(times[i + 1] - times[i]) - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(denom));
}

ChannelField count_field(const EventStream & stream, const std::vector<PixelHistory> & px)
{
  std::vector<double> v(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) v[i] = static_cast<double>(px[i].times.size());
  return ChannelField(stream.dims(), ChannelKind::count, std::move(v));
}

ChannelField integral_field(const EventStream & stream, const std::vector<PixelHistory> & px)
{
  std::vector<double> v(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) v[i] = static_cast<double>(px[i].polarity_sum);
  return ChannelField(stream.dims(), ChannelKind::integral, std::move(v));
}

ChannelField temporal_field(
  const EventStream & stream, const std::vector<PixelHistory> & px, TemporalMode mode)
{
  std::vector<double> v(px.size());
  for (std::size_t i = 0; i < px.size(); ++i) v[i] = interval_spread(px[i].times, mode);
  return ChannelField(stream.dims(), ChannelKind::temporal, std::move(v));
}
}  // namespace

ChannelField compute_e_c(const EventStream & stream)
{
  std::vector<double> v(stream.dims().pixels(), 0.0);
  for (const Event & e : stream.events()) v[stream.dims().index(e.x, e.y)] += 1.0;
  return ChannelField(stream.dims(), ChannelKind::count, std::move(v));
}

ChannelField compute_e_i(const EventStream & stream)
{
  std::vector<double> v(stream.dims().pixels(), 0.0);
  for (const Event & e : stream.events()) v[stream.dims().index(e.x, e.y)] += e.p;
  return ChannelField(stream.dims(), ChannelKind::integral, std::move(v));
}

ChannelField compute_e_t(const EventStream & stream, TemporalMode mode)
{
  return temporal_field(stream, group_by_pixel(stream), mode);
}

EvRep compute_evrep(const EventStream & stream, TemporalMode mode)
{
  const std::vector<PixelHistory> px = group_by_pixel(stream);
  return EvRep{
    integral_field(stream, px), count_field(stream, px), temporal_field(stream, px, mode)};
}

}  // namespace evkit
