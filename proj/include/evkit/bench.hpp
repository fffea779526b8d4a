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

#ifndef EVKIT_BENCH_HPP
#define EVKIT_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "evkit/event.hpp"
#include "evkit/evrep.hpp"

namespace evkit
{
enum class EvRepPath { reference, streaming };

std::string_view to_string(EvRepPath path);
/// "reference" or "streaming"; throws InvalidArgument otherwise.
EvRepPath parse_evrep_path(std::string_view name);

struct BenchReport
{
  std::size_t events_processed{0};
  double wall_time{0.0};         // seconds, median over repeats
  double throughput_kev_s{0.0};  // events_processed / wall_time / 1000
  EvRepPath path{EvRepPath::reference};
  std::size_t repeat{1};
};

/// Runs the selected EvRep path `repeat` times on an already-loaded stream
/// and reports the median wall time. repeat must be >= 1.
BenchReport run_bench(
  const EventStream & stream, EvRepPath path, std::size_t repeat,
  TemporalMode mode = TemporalMode::literal);

/// key=value lines: path, events, repeat, wall_time_s, throughput_kev_s.
std::string format_bench_report(const BenchReport & report);

/// `count` events at uniformly random pixels, timestamps spread evenly over
/// [0, duration_us], random polarity. Deterministic in seed.
EventStream synthetic_stream(
  Dims dims, std::size_t count, std::uint64_t seed = 1, std::uint64_t duration_us = 100000);

}  // namespace evkit
#endif  // EVKIT_BENCH_HPP
