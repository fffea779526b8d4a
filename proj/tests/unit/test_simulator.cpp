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

#include <cmath>

#include "evkit/error.hpp"
#include "evkit/evrep.hpp"
#include "evkit/simulator.hpp"
#include "evkit/transforms.hpp"
#include "support/oracles.hpp"

using namespace evkit;

namespace
{
const Dims k1{1, 1};

Frame px(double v, std::uint64_t t = 0)
{
  return Frame(k1, t, {v});
}
}  // namespace

TEST_CASE("three positive events for a log change of 0.3 at theta 0.1")
{
  const CameraModel m = CameraModel::uniform(k1, 0.1, 0.0);
  const EventStream s = simulate_pair(px(0.2), px(0.2 * std::exp(0.3)), m, 0, 100);
  REQUIRE(s.size() == 3);
  for (const Event & e : s.events()) CHECK(e.p == 1);
  CHECK(s.window() == Window{0, 100});
}

TEST_CASE("two negative events for a log change of -0.25")
{
  const CameraModel m = CameraModel::uniform(k1, 0.1, 0.0);
  const EventStream s = simulate_pair(px(0.4), px(0.4 * std::exp(-0.25)), m, 0, 100);
  REQUIRE(s.size() == 2);
  for (const Event & e : s.events()) CHECK(e.p == -1);
  // residual -0.25 + 2 * 0.1 = -0.05 is left unemitted
  const double residual = std::log(std::exp(-0.25)) + 2 * 0.1;
  CHECK(residual == doctest::Approx(-0.05));
}

TEST_CASE("unchanged frames emit nothing")
{
  const Frame f(Dims{3, 3}, 0, std::vector<double>(9, 0.37));
  CHECK(simulate_pair(f, f.with_time(10), CameraModel::uniform(f.dims(), 0.05, 0.1), 0, 10).empty());
}

TEST_CASE("uniform timing spreads events inside [t0, t1)")
{
  const CameraModel m = CameraModel::uniform(k1, 0.1, 0.0);
  const EventStream s = simulate_pair(px(0.2), px(0.2 * std::exp(0.3)), m, 1000, 1100);
  REQUIRE(s.size() == 3);
  CHECK(s.events()[0].t == 1025);
  CHECK(s.events()[1].t == 1050);
  CHECK(s.events()[2].t == 1075);
}

TEST_CASE("leading-edge timing")
{
  const CameraModel m = CameraModel::uniform(k1, 0.1, 0.0);
  TimingModel tm;
  tm.mode = TimingMode::leading_edge;
  const EventStream s = simulate_pair(px(0.2), px(0.2 * std::exp(0.3)), m, 1000, 1002, tm);
  REQUIRE(s.size() == 3);
  CHECK(s.events()[0].t == 1001);
  CHECK(s.events()[1].t == 1001);  // capped at t1 - 1
  CHECK(s.events()[2].t == 1001);
}

TEST_CASE("per-pixel counts obey the threshold-crossing bound")
{
  const Dims d{24, 18};
  const auto frames = testing::smooth_frames(d, 2, 10000, 3.0);
  const double k = 0.05;
  const CameraModel m = CameraModel::uniform(d, 0.02, k);
  const EventStream s = simulate_pair(frames[0], frames[1], m, 0, 10000);
  const auto o = testing::tally(s);
  for (std::size_t i = 0; i < d.pixels(); ++i) {
    const double delta = std::log((frames[1].values()[i] + k) / (frames[0].values()[i] + k));
    const double n = o.count[i];
    // all events share the sign of the change; what is left is below one threshold
    CHECK(std::fabs(o.polarity[i]) == n);
    if (n > 0) CHECK((o.polarity[i] > 0) == (delta > 0));
    const double residual = std::fabs(delta) - n * 0.02;
    CHECK(residual < 0.02);
    CHECK(residual > -1e-9 * 0.02);
  }
}

TEST_CASE("exact multiples of theta leave no residual")
{
  const Dims d{10, 10};
  const double theta = 0.02;
  const double k = 0.05;
  const auto frames = testing::exact_multiple_frames(d, 2, 1000, theta, k);
  const EventStream s = simulate_pair(frames[0], frames[1], CameraModel::uniform(d, theta, k), 0, 1000);
  const ChannelField e_i = compute_e_i(s);
  const auto e = e_i.values();
  for (std::size_t i = 0; i < d.pixels(); ++i) {
    const double delta = std::log((frames[1].values()[i] + k) / (frames[0].values()[i] + k));
    CHECK(std::fabs(delta - e[i] * theta) < 1e-12);
  }
}

TEST_CASE("invalid model or interval")
{
  const Frame a(Dims{2, 1}, 0, {0.0, 0.5});
  const Frame b(Dims{2, 1}, 10, {0.5, 0.5});
  CHECK_THROWS_AS(simulate_pair(a, b, CameraModel::uniform(a.dims(), 0.1, 0.0), 0, 10), DomainError);
  CHECK_THROWS_AS(simulate_pair(b, b, CameraModel::uniform(a.dims(), 0.0, 0.1), 0, 10), DomainError);
  CHECK_THROWS_AS(simulate_pair(b, b, CameraModel::uniform(a.dims(), 0.1, 0.1), 10, 10), InvalidArgument);
  CHECK_THROWS_AS(simulate_pair(b, b, CameraModel::uniform(Dims{1, 2}, 0.1, 0.1), 0, 10), InvalidArgument);
}

TEST_CASE("two-frame sequence equals simulate_pair")
{
  const Dims d{16, 12};
  const auto frames = testing::smooth_frames(d, 2, 5000, 2.0);
  const CameraModel m = CameraModel::uniform(d, 0.03, 0.1);
  CHECK(simulate_sequence(frames, m) == simulate_pair(frames[0], frames[1], m, 0, 5000));
}

TEST_CASE("constant sequence is empty")
{
  const Frame f(Dims{4, 4}, 0, std::vector<double>(16, 0.6));
  const std::vector<Frame> frames{f, f.with_time(100), f.with_time(250)};
  const EventStream s = simulate_sequence(frames, CameraModel::uniform(f.dims(), 0.1, 0.0));
  CHECK(s.empty());
  CHECK(s.window() == Window{0, 250});
}

TEST_CASE("a repeated first frame moves every event to the second interval")
{
  const Dims d{12, 12};
  const auto base = testing::smooth_frames(d, 2, 1, 4.0);
  const std::vector<Frame> frames{base[0].with_time(0), base[0].with_time(400), base[1].with_time(1000)};
  const CameraModel m = CameraModel::uniform(d, 0.04, 0.02);
  const EventStream seq = simulate_sequence(frames, m);
  const EventStream pair = simulate_pair(frames[1], frames[2], m, 400, 1000);
  CHECK(std::equal(seq.events().begin(), seq.events().end(), pair.events().begin(), pair.events().end()));
}

TEST_CASE("sequence integral telescopes up to one threshold per interval")
{
  const Dims d{20, 20};
  const auto frames = testing::smooth_frames(d, 6, 2000, 1.5);
  const double theta = 0.03;
  const double k = 0.05;
  const EventStream s = simulate_sequence(frames, CameraModel::uniform(d, theta, k));
  const ChannelField e_i = compute_e_i(s);
  const auto e = e_i.values();
  for (std::size_t i = 0; i < d.pixels(); ++i) {
    const double total =
      std::log((frames.back().values()[i] + k) / (frames.front().values()[i] + k)) / theta;
    CHECK(std::fabs(total - e[i]) < static_cast<double>(frames.size() - 1));
  }
}

TEST_CASE("slicing a sequence recovers each interval")
{
  const Dims d{9, 7};
  const auto frames = testing::smooth_frames(d, 5, 777, 2.5);
  const CameraModel m = CameraModel::uniform(d, 0.025, 0.05);
  const EventStream s = simulate_sequence(frames, m);
  for (std::size_t j = 0; j + 1 < frames.size(); ++j) {
    CHECK(slice_by_time(s, frames[j].t(), frames[j + 1].t()) ==
          simulate_pair(frames[j], frames[j + 1], m, frames[j].t(), frames[j + 1].t()));
  }
}

TEST_CASE("sequence timestamps must increase")
{
  const Frame f(Dims{1, 1}, 0, {0.5});
  const std::vector<Frame> bad{f, f.with_time(0)};
  CHECK_THROWS_AS(simulate_sequence(bad, CameraModel::uniform(f.dims(), 0.1, 0.0)), InvalidArgument);
  const std::vector<Frame> one{f};
  CHECK_THROWS_AS(simulate_sequence(one, CameraModel::uniform(f.dims(), 0.1, 0.0)), InvalidArgument);
}

TEST_CASE("noise in the timing model is applied and seeded")
{
  const Dims d{10, 10};
  const auto frames = testing::smooth_frames(d, 2, 100000, 2.0);
  const CameraModel m = CameraModel::uniform(d, 0.05, 0.05);
  TimingModel tm;
  tm.noise = NoiseConfig{};
  tm.noise->ba_rate = 100.0;
  tm.noise->seed = 4;
  const EventStream clean = simulate_sequence(frames, m);
  const EventStream noisy = simulate_sequence(frames, m, tm);
  CHECK(noisy.size() > clean.size());
  CHECK(simulate_sequence(frames, m, tm) == noisy);
}
