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

#include <doctest.h>

#include <random>
#include <string>

#include "evkit/error.hpp"
#include "evkit/event.hpp"
#include "evkit/event_io.hpp"
#include "evkit/evrep.hpp"
#include "evkit/frame.hpp"
#include "evkit/image_io.hpp"
#include "evkit/transforms.hpp"
#include "support/oracles.hpp"

using namespace evkit;

namespace
{
EventStream make(Dims d, Window w, std::vector<Event> ev)
{
  return EventStream(d, w, std::move(ev));
}
}  // namespace

TEST_CASE("stream constructor enforces its invariants")
{
  const Dims d{2, 2};
  CHECK_NOTHROW(make(d, {0, 10}, {{0, 0, 0, 1}, {10, 1, 1, -1}}));
  CHECK_THROWS_AS(make(d, {0, 10}, {{5, 0, 0, 1}, {4, 0, 0, 1}}), InvalidArgument);  // unsorted
  CHECK_THROWS_AS(make(d, {0, 10}, {{11, 0, 0, 1}}), InvalidArgument);               // outside window
  CHECK_THROWS_AS(make(d, {0, 10}, {{1, 2, 0, 1}}), InvalidArgument);                // x out of range
  CHECK_THROWS_AS(make(d, {0, 10}, {{1, 0, 0, 0}}), InvalidArgument);                // polarity
  CHECK_THROWS_AS(make(d, {10, 5}, {}), InvalidArgument);                            // inverted window
}

TEST_CASE("frame values must lie in [0, 1]")
{
  CHECK_NOTHROW(Frame(Dims{2, 1}, 0, {0.0, 1.0}));
  CHECK_THROWS_AS(Frame(Dims{2, 1}, 0, {0.0, 1.5}), InvalidArgument);
  CHECK_THROWS_AS(Frame(Dims{2, 1}, 0, {0.0, -1e-9}), InvalidArgument);
  CHECK_THROWS_AS(Frame(Dims{2, 1}, 0, {0.0}), InvalidArgument);
}

TEST_CASE("text events: two lines")
{
  const EventStream s = parse_text_events("10 0 0 1\n20 0 0 -1", Dims{2, 2});
  REQUIRE(s.size() == 2);
  CHECK(s.t_start() == 10);
  CHECK(s.t_end() == 20);
  CHECK(s.events()[0] == Event{10, 0, 0, 1});
  CHECK(s.events()[1] == Event{20, 0, 0, -1});
}

TEST_CASE("text events: empty source")
{
  const EventStream s = parse_text_events("", Dims{2, 2});
  CHECK(s.empty());
  CHECK(s.dims() == Dims{2, 2});
}

TEST_CASE("text events: out of bounds x names the line")
{
  try {
    (void)parse_text_events("10 5 0 1", Dims{2, 2});
    FAIL("expected a parse error");
  } catch (const ParseError & e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("x=5") != std::string::npos);
  }
}

TEST_CASE("text events: comments, blank lines, zero polarity, sorting")
{
  const std::string src = "# header\n\n30 1 0 0\n  10 0 1 1  # trailing\n";
  const EventStream s = parse_text_events(src, Dims{2, 2});
  REQUIRE(s.size() == 2);
  CHECK(s.events()[0] == Event{10, 0, 1, 1});
  CHECK(s.events()[1] == Event{30, 1, 0, -1});
  CHECK_THROWS_AS(parse_text_events("30 1 0 0", Dims{2, 2}, ZeroPolarity::reject), ParseError);
  CHECK_THROWS_AS(parse_text_events("1 0 0 1\n-4 0 0 1", Dims{2, 2}), ParseError);
  CHECK_THROWS_AS(parse_text_events("1 0 0 2", Dims{2, 2}), ParseError);
  CHECK_THROWS_AS(parse_text_events("1 0 0", Dims{2, 2}), ParseError);
  CHECK_THROWS_AS(parse_text_events("1 0 a 1", Dims{2, 2}), ParseError);
}

TEST_CASE("text events survive a write/parse cycle")
{
  std::mt19937_64 rng(3);
  const EventStream s = testing::random_stream(rng, Dims{17, 9}, 500);
  const EventStream back = parse_text_events(write_text_events(s), s.dims());
  CHECK(std::equal(s.events().begin(), s.events().end(), back.events().begin(), back.events().end()));
}

TEST_CASE("EVT1 round trip")
{
  std::mt19937_64 rng(11);
  const EventStream s = testing::random_stream(rng, Dims{64, 48}, 1000, 123, 50000);
  const Bytes b = write_binary_events(s);
  CHECK(b.size() == 4 + 2 + 2 + 8 + 8 + 8 + 1000 * 13 + 4);
  CHECK(parse_binary_events(b) == s);
}

TEST_CASE("EVT1 empty stream is header only")
{
  const EventStream s(Dims{4, 4}, Window{0, 0});
  const Bytes b = write_binary_events(s);
  CHECK(b.size() == 32 + 4);
  CHECK(parse_binary_events(b) == s);
}

TEST_CASE("EVT1 bad magic")
{
  Bytes b = write_binary_events(EventStream(Dims{4, 4}, Window{0, 0}));
  b[0] = 'X';
  b[1] = 'X';
  b[2] = 'X';
  b[3] = 'X';
  try {
    (void)parse_binary_events(b);
    FAIL("expected a format error");
  } catch (const FormatError & e) {
    CHECK(std::string(e.what()).find("magic") != std::string::npos);
  }
}

TEST_CASE("slice is half-open")
{
  const EventStream s = make(Dims{1, 1}, {0, 20}, {{5, 0, 0, 1}, {10, 0, 0, 1}, {15, 0, 0, 1}});
  const EventStream a = slice_by_time(s, 10, 15);
  REQUIRE(a.size() == 1);
  CHECK(a.events()[0].t == 10);
  CHECK(a.window() == Window{10, 15});

  const EventStream all = slice_by_time(s, 0, s.t_end() + 1);
  CHECK(all.size() == 3);
  CHECK(slice_by_time(s, 7, 7).empty());
  CHECK_THROWS_AS(slice_by_time(s, 8, 7), InvalidArgument);
}

TEST_CASE("reverse maps t to t0 + t1 - t and flips polarity")
{
  const EventStream s = make(Dims{1, 1}, {0, 30}, {{10, 0, 0, 1}, {20, 0, 0, 1}});
  const EventStream r = reverse_stream(s);
  REQUIRE(r.size() == 2);
  CHECK(r.events()[0] == Event{10, 0, 0, -1});
  CHECK(r.events()[1] == Event{20, 0, 0, -1});
  CHECK(r.window() == s.window());
}

TEST_CASE("reverse is an involution and negates E_I")
{
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const EventStream s = testing::random_stream(rng, Dims{13, 7}, 300, 40, 900);
    const EventStream r = reverse_stream(s);
    CHECK(reverse_stream(r) == s);
    CHECK(compute_e_i(r) == compute_e_i(s).negated());
  }
}

TEST_CASE("rotate90: one quarter turn of a corner")
{
  // width 2, height 3
  const EventStream s = make(Dims{2, 3}, {0, 1}, {{0, 0, 0, 1}});
  const EventStream r = rotate90(s, 1);
  CHECK(r.dims() == Dims{3, 2});
  CHECK(r.events()[0] == Event{0, 2, 0, 1});
}

TEST_CASE("rotate90: zero and four turns are identities")
{
  std::mt19937_64 rng(8);
  const EventStream s = testing::random_stream(rng, Dims{5, 9}, 200);
  CHECK(rotate90(s, 0) == s);
  CHECK(rotate90(rotate90(rotate90(rotate90(s, 1), 1), 1), 1) == s);
  CHECK(rotate90(rotate90(s, 1), 3) == s);
  CHECK(rotate90(rotate90(s, 2), 2) == s);
  CHECK_THROWS_AS(rotate90(s, 4), InvalidArgument);
  CHECK_THROWS_AS(rotate90(s, -1), InvalidArgument);
}

TEST_CASE("rotate90 keeps the multiset of (t, p)")
{
  std::mt19937_64 rng(9);
  const EventStream s = testing::random_stream(rng, Dims{6, 4}, 100);
  for (int q = 0; q < 4; ++q) {
    const EventStream r = rotate90(s, q);
    REQUIRE(r.size() == s.size());
    std::vector<std::pair<std::uint64_t, int>> a;
    std::vector<std::pair<std::uint64_t, int>> b;
    for (const Event & e : s.events()) a.emplace_back(e.t, e.p);
    for (const Event & e : r.events()) b.emplace_back(e.t, e.p);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("rotate90 of fields and frames follows the event mapping")
{
  const Dims d{3, 2};
  const ChannelField f(d, ChannelKind::count, {1, 2, 3, 4, 5, 6});
  const ChannelField r = rotate90(f, 1);
  CHECK(r.dims() == Dims{2, 3});
  // source (x, y) lands at (h - 1 - y, x)
  for (std::size_t y = 0; y < d.height; ++y) {
    for (std::size_t x = 0; x < d.width; ++x) {
      CHECK(r.at(d.height - 1 - y, x) == f.at(x, y));
    }
  }
  const Frame fr(d, 7, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
  CHECK(rotate90(rotate90(fr, 2), 2) == fr);
  CHECK(rotate90(fr, 3).at(0, 2) == fr.at(0, 0));  // (x, y) -> (y, w - 1 - x)
}

TEST_CASE("shift_time moves events and window")
{
  const EventStream s = make(Dims{1, 1}, {5, 9}, {{6, 0, 0, 1}});
  const EventStream t = shift_time(s, 100);
  CHECK(t.window() == Window{105, 109});
  CHECK(t.events()[0].t == 106);
}

TEST_CASE("PGM: 8-bit and 16-bit, comments, round trip")
{
  const std::string p5 = std::string("P5\n# c\n2 1\n255\n") + char(0) + char(255);
  const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t *>(p5.data()), p5.size());
  const Frame f = frame_from_pgm(bytes, 42);
  CHECK(f.t() == 42);
  CHECK(f.at(0, 0) == 0.0);
  CHECK(f.at(1, 0) == 1.0);
  CHECK(frame_from_pgm(write_frame_pgm(f), 42) == f);

  GrayImage wide;
  wide.dims = Dims{2, 1};
  wide.maxval = 1000;
  wide.pixels = {250, 1000};
  const GrayImage back = parse_pgm(write_pgm(wide));
  CHECK(back.pixels == wide.pixels);
  CHECK(back.maxval == 1000);
  CHECK(frame_from_pgm(write_pgm(wide), 0).at(0, 0) == 0.25);

  const std::string bad = "P2\n1 1\n255\n0";
  CHECK_THROWS_AS(
    parse_pgm(std::span(reinterpret_cast<const std::uint8_t *>(bad.data()), bad.size())), FormatError);
  const std::string short_raster = "P5\n2 2\n255\n\x01";
  CHECK_THROWS_AS(
    parse_pgm(std::span(reinterpret_cast<const std::uint8_t *>(short_raster.data()), short_raster.size())),
    FormatError);
}

TEST_CASE("quantization rounds v * 255")
{
  const Frame f(Dims{5, 1}, 0, {0.0, 0.5, 1.0, 0.2, 0.5 / 255.0});
  const GrayImage g = quantize_frame(f);
  // 127.5 rounds to the even 128, 0.5 to the even 0
  CHECK(g.pixels == std::vector<std::uint16_t>{0, 128, 255, 51, 0});
}

TEST_CASE("frame manifest")
{
  const auto entries = parse_frame_manifest("# frames\na.pgm 0\n\nsub/b.pgm 50000\n", "/data");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].file == std::filesystem::path("/data/a.pgm"));
  CHECK(entries[1].t == 50000);
  CHECK_THROWS_AS(parse_frame_manifest("a.pgm\n", "/"), ParseError);
  CHECK_THROWS_AS(parse_frame_manifest("a.pgm x1\n", "/"), ParseError);
}
