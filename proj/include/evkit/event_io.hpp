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

#ifndef EVKIT_EVENT_IO_HPP
#define EVKIT_EVENT_IO_HPP

#include <filesystem>
#include <span>
#include <string_view>

#include "evkit/bytes.hpp"
#include "evkit/event.hpp"

namespace evkit
{
/// How a polarity of 0 in text input is interpreted.
enum class ZeroPolarity {
  negative,  // many datasets store OFF events as 0
  reject,
};

/// Parses "t x y p" lines (whitespace separated, '#' starts a comment, blank
/// lines ignored). Unsorted input is stably sorted. The window is
/// [min t, max t], or [0, 0] when there are no events.
///
/// Throws ParseError (with line number) on malformed lines, negative
/// timestamps, bad polarities and out-of-bounds coordinates.
EventStream parse_text_events(
  std::string_view source, Dims dims, ZeroPolarity zero = ZeroPolarity::negative);

/// One "t x y p" line per event.
std::string write_text_events(const EventStream & stream);

/// EVT1 container:
///   "EVT1" | u16 width | u16 height | u64 t_start | u64 t_end | u64 count |
///   count x (u64 t | u16 x | u16 y | i8 p) | u32 CRC-32
/// All integers little-endian; the CRC covers every byte before it.
Bytes write_binary_events(const EventStream & stream);
EventStream parse_binary_events(std::span<const std::uint8_t> data);

/// True when `data` starts with the EVT1 magic.
bool looks_like_evt1(std::span<const std::uint8_t> data);

/// Loads EVT1 or text (text needs `dims`, which EVT1 ignores).
EventStream load_events(
  const std::filesystem::path & path, Dims dims, ZeroPolarity zero = ZeroPolarity::negative);

}  // namespace evkit
#endif  // EVKIT_EVENT_IO_HPP
