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

#include "evkit/event_io.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "evkit/error.hpp"

namespace evkit
{
namespace
{
constexpr std::array<std::uint8_t, 4> kEvt1Magic{0x45, 0x56, 0x54, 0x31};
constexpr std::size_t kEvt1HeaderBytes = 4 + 2 + 2 + 8 + 8 + 8;
constexpr std::size_t kEvt1EventBytes = 8 + 2 + 2 + 1;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits a line into at most 5 tokens so that extra fields are detectable.
std::size_t tokenize(std::string_view line, std::array<std::string_view, 5> & tokens)
{
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < line.size() && n < tokens.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    tokens[n++] = line.substr(i, j - i);
    i = j;
  }
  return n;
}

template <typename T>
bool parse_int(std::string_view tok, T & out)
{
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

EventStream parse_text_events(std::string_view source, Dims dims, ZeroPolarity zero)
{
  std::vector<Event> events;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < source.size()) {
    std::size_t end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::array<std::string_view, 5> tok{};
    const std::size_t n = tokenize(line, tok);
    if (n == 0) continue;
    if (n != 4) {
      throw ParseError(line_no, "expected 4 fields \"t x y p\", got " + std::to_string(n));
    }

    std::int64_t t = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;
    int p = 0;
    if (!parse_int(tok[0], t)) throw ParseError(line_no, "bad timestamp '" + std::string(tok[0]) + "'");
    if (!parse_int(tok[1], x)) throw ParseError(line_no, "bad x '" + std::string(tok[1]) + "'");
    if (!parse_int(tok[2], y)) throw ParseError(line_no, "bad y '" + std::string(tok[2]) + "'");
    if (!parse_int(tok[3], p)) throw ParseError(line_no, "bad polarity '" + std::string(tok[3]) + "'");

    if (t < 0) throw ParseError(line_no, "negative timestamp " + std::to_string(t));
    if (x < 0 || x >= dims.width) {
      throw ParseError(
        line_no, "x=" + std::to_string(x) + " out of bounds for width " + std::to_string(dims.width));
    }
    if (y < 0 || y >= dims.height) {
      throw ParseError(
        line_no,
        "y=" + std::to_string(y) + " out of bounds for height " + std::to_string(dims.height));
    }
    if (p == 0 && zero == ZeroPolarity::negative) {
      p = -1;
    }
    if (p != 1 && p != -1) {
      throw ParseError(line_no, "polarity must be -1 or 1, got " + std::to_string(p));
    }
    events.push_back(
      Event{static_cast<std::uint64_t>(t), static_cast<std::uint16_t>(x),
            static_cast<std::uint16_t>(y), static_cast<std::int8_t>(p)});
  }

  if (!std::is_sorted(events.begin(), events.end(), [](const Event & a, const Event & b) {
        return a.t < b.t;
      })) {
    sort_by_time(events);
  }
  Window w{};
  if (!events.empty()) {
    w = Window{events.front().t, events.back().t};
  }
  return EventStream(dims, w, std::move(events));
}

std::string write_text_events(const EventStream & stream)
{
  std::string out;
  out.reserve(stream.size() * 16);
  char buf[32];
  auto put = [&](auto v, char sep) {
    out.append(buf, std::to_chars(buf, buf + sizeof(buf), v).ptr);
    out.push_back(sep);
  };
  for (const Event & e : stream.events()) {
    put(e.t, ' ');
    put(e.x, ' ');
    put(e.y, ' ');
    put(static_cast<int>(e.p), '\n');
  }
  return out;
}

Bytes write_binary_events(const EventStream & stream)
{
  ByteWriter w;
  w.reserve(kEvt1HeaderBytes + stream.size() * kEvt1EventBytes + 4);
  w.magic(kEvt1Magic);
  w.u16(stream.width());
  w.u16(stream.height());
  w.u64(stream.t_start());
  w.u64(stream.t_end());
  w.u64(stream.size());
  for (const Event & e : stream.events()) {
    w.u64(e.t);
    w.u16(e.x);
    w.u16(e.y);
    w.i8(e.p);
  }
  return std::move(w).finish_with_crc();
}

bool looks_like_evt1(std::span<const std::uint8_t> data)
{
  return data.size() >= 4 && std::equal(kEvt1Magic.begin(), kEvt1Magic.end(), data.begin());
}

EventStream parse_binary_events(std::span<const std::uint8_t> data)
{
  ByteReader(data).expect_magic(kEvt1Magic, "EVT1");
  ByteReader r(strip_verified_crc(data));
  r.expect_magic(kEvt1Magic, "EVT1");
  Dims dims;
  dims.width = r.u16();
  dims.height = r.u16();
  Window w;
  w.t_start = r.u64();
  w.t_end = r.u64();
  const std::uint64_t count = r.u64();
  if (count > r.remaining() / kEvt1EventBytes) {
    throw FormatError("truncated payload: header declares " + std::to_string(count) + " events");
  }
  r.require_remaining(count * kEvt1EventBytes, "event records");
  std::vector<Event> events(count);
  for (Event & e : events) {
    e.t = r.u64();
    e.x = r.u16();
    e.y = r.u16();
    e.p = r.i8();
  }
  try {
    return EventStream(dims, w, std::move(events));
  } catch (const InvalidArgument & ex) {
    throw FormatError(std::string("invalid EVT1 content: ") + ex.what());
  }
}

EventStream load_events(const std::filesystem::path & path, Dims dims, ZeroPolarity zero)
{
  const Bytes data = read_file(path);
  if (looks_like_evt1(data)) {
    return parse_binary_events(data);
  }
  return parse_text_events(
    std::string_view(reinterpret_cast<const char *>(data.data()), data.size()), dims, zero);
}

}  // namespace evkit
