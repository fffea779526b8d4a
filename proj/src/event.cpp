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

#include "evkit/event.hpp"

#include <algorithm>
#include <string>

#include "evkit/error.hpp"

namespace evkit
{
EventStream::EventStream(Dims dims, Window window, std::vector<Event> events)
: dims_(dims), window_(window), events_(std::move(events))
{
  if (window_.t_start > window_.t_end) {
    throw InvalidArgument("event window start after end");
  }
  std::uint64_t prev = window_.t_start;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event & e = events_[i];
    if (e.p != 1 && e.p != -1) {
      throw InvalidArgument("event " + std::to_string(i) + ": polarity must be -1 or +1");
    }
    if (!dims_.contains(e.x, e.y)) {
      throw InvalidArgument(
        "event " + std::to_string(i) + ": pixel (" + std::to_string(e.x) + ", " +
        std::to_string(e.y) + ") outside " + std::to_string(dims_.width) + "x" +
        std::to_string(dims_.height));
    }
    if (e.t < prev) {
      throw InvalidArgument(
        "event " + std::to_string(i) + ": timestamp " + std::to_string(e.t) +
        (e.t < window_.t_start ? " before window start" : " out of order"));
    }
    if (e.t > window_.t_end) {
      throw InvalidArgument(
        "event " + std::to_string(i) + ": timestamp " + std::to_string(e.t) + " after window end");
    }
    prev = e.t;
  }
}

std::vector<Event> EventStream::release() &&
{
  std::vector<Event> out = std::move(events_);
  events_.clear();
  return out;
}

void sort_by_time(std::vector<Event> & events)
{
  std::stable_sort(
    events.begin(), events.end(), [](const Event & a, const Event & b) { return a.t < b.t; });
}

}  // namespace evkit
