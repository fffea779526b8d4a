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

#include "evkit/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <random>
#include <vector>

#include "evkit/error.hpp"

namespace evkit
{
std::string_view to_string(EvRepPath path)
{
  return path == EvRepPath::reference ? "reference" : "streaming";
}

EvRepPath parse_evrep_path(std::string_view name)
{
  if (name == "reference") return EvRepPath::reference;
  if (name == "streaming") return EvRepPath::streaming;
  throw InvalidArgument("unknown EvRep path '" + std::string(name) + "' (reference|streaming)");
}

BenchReport run_bench(
  const EventStream & stream, EvRepPath path, std::size_t repeat, TemporalMode mode)
{
  if (repeat == 0) {
    throw InvalidArgument("bench: repeat must be >= 1");
  }
  std::vector<double> times;
  times.reserve(repeat);
  std::size_t sink = 0;
  for (std::size_t i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const EvRep rep = path == EvRepPath::reference ? compute_evrep(stream, mode)
                                                   : compute_evrep_streaming(stream, mode);
    const auto stop = std::chrono::steady_clock::now();
    sink += rep.e_c.values().size();
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  double wall = times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
  wall = std::max(wall, 1e-9);  // clock granularity on tiny inputs

  BenchReport r;
  r.events_processed = stream.size();
  r.wall_time = wall;
  r.throughput_kev_s = static_cast<double>(stream.size()) / wall / 1000.0;
  r.path = path;
  r.repeat = repeat;
  (void)sink;
  return r;
}

std::string format_bench_report(const BenchReport & report)
{
  auto num = [](double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  };
  std::string out;
  out += "path=" + std::string(to_string(report.path)) + "\n";
  out += "events=" + std::to_string(report.events_processed) + "\n";
  out += "repeat=" + std::to_string(report.repeat) + "\n";
  out += "wall_time_s=" + num(report.wall_time) + "\n";
  out += "throughput_kev_s=" + num(report.throughput_kev_s) + "\n";
  return out;
}

EventStream synthetic_stream(Dims dims, std::size_t count, std::uint64_t seed, std::uint64_t duration_us)
{
  if (dims.pixels() == 0 && count != 0) {
    throw InvalidArgument("synthetic_stream: zero-sized sensor");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> px(0, static_cast<std::uint32_t>(dims.pixels() - 1));
  std::vector<Event> events(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t p = px(rng);
    const std::uint64_t t =
      count <= 1 ? 0 : static_cast<std::uint64_t>(
                         static_cast<unsigned __int128>(i) * duration_us / (count - 1));
    events[i] = Event{
      t, static_cast<std::uint16_t>(p % dims.width), static_cast<std::uint16_t>(p / dims.width),
      static_cast<std::int8_t>((rng() & 1) ? 1 : -1)};
  }
  return EventStream(dims, Window{0, duration_us}, std::move(events));
}

}  // namespace evkit
