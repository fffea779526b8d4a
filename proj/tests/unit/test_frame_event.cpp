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
#include <random>

#include "evkit/camera_io.hpp"
#include "evkit/error.hpp"
#include "evkit/frame_event.hpp"
#include "support/oracles.hpp"

using namespace evkit;

namespace
{
const Dims k1{1, 1};

Frame px(double v, std::uint64_t t = 0)
{
  return Frame(k1, t, {v});
}

ChannelField integral(double e)
{
  return ChannelField(k1, ChannelKind::integral, {e});
}
}  // namespace

TEST_CASE("log ratio of equal frames is zero")
{
  const Frame f(Dims{3, 1}, 0, {0.0, 0.5, 1.0});
  const ChannelField r = log_intensity_ratio(f, f, 0.1);
  for (const double v : r.values()) CHECK(v == 0.0);
}

TEST_CASE("log ratio: ln(0.6107 / 0.5)")
{
  const double r = log_intensity_ratio(px(0.5), px(0.6107), 0.0).values()[0];
  CHECK(r == doctest::Approx(0.2000).epsilon(1e-3));
  CHECK(r == doctest::Approx(std::log(0.6107 / 0.5)).epsilon(1e-15));
}

TEST_CASE("log ratio of a black pixel with k = 0 is a domain error")
{
  const Frame a(Dims{2, 1}, 0, {0.5, 0.0});
  const Frame b(Dims{2, 1}, 0, {0.5, 0.3});
  try {
    (void)log_intensity_ratio(a, b, 0.0);
    FAIL("expected a domain error");
  } catch (const DomainError & e) {
    CHECK(e.x() == 1);
    CHECK(e.y() == 0);
  }
  CHECK_NOTHROW(log_intensity_ratio(a, b, 0.01));
}

TEST_CASE("zero integral reproduces f0 exactly")
{
  const Frame f(Dims{4, 1}, 5, {0.0, 0.3, 0.7, 1.0});
  const CameraModel m = CameraModel::uniform(f.dims(), 0.13, 0.07);
  const ChannelField zero = ChannelField::zeros(f.dims(), ChannelKind::integral);
  const Reconstruction r = reconstruct_next(f, zero, m);
  CHECK(r.frame == f);
  CHECK(r.clamped_pixels == 0);
  CHECK(reconstruct_prev(f, zero, m).frame == f);
}

TEST_CASE("forward prediction: 0.5 * e^0.2")
{
  const Reconstruction r = reconstruct_next(px(0.5), integral(2), CameraModel::uniform(k1, 0.1, 0.0));
  CHECK(r.frame.values()[0] == doctest::Approx(0.61070).epsilon(1e-5));
  CHECK(r.raw[0] == doctest::Approx(0.5 * std::exp(0.2)).epsilon(1e-15));
}

TEST_CASE("forward prediction clamps and counts")
{
  const Reconstruction r = reconstruct_next(px(0.9), integral(3), CameraModel::uniform(k1, 0.2, 0.05));
  CHECK(r.raw[0] == doctest::Approx(0.95 * std::exp(0.6) - 0.05).epsilon(1e-15));
  CHECK(r.raw[0] == doctest::Approx(1.6811).epsilon(1e-4));
  CHECK(r.frame.values()[0] == 1.0);
  CHECK(r.clamped_pixels == 1);
}

TEST_CASE("backward prediction: 0.6107 * e^-0.2")
{
  const Reconstruction r = reconstruct_prev(px(0.6107), integral(2), CameraModel::uniform(k1, 0.1, 0.0));
  CHECK(r.frame.values()[0] == doctest::Approx(0.5000).epsilon(1e-3));
  CHECK(r.frame.values()[0] == doctest::Approx(0.6107 * std::exp(-0.2)).epsilon(1e-15));
}

TEST_CASE("prev undoes next when nothing clamps")
{
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.2, 0.5);
  std::uniform_int_distribution<int> e(-3, 3);
  const Dims d{16, 8};
  std::vector<double> f(d.pixels());
  std::vector<double> ei(d.pixels());
  std::vector<double> th(d.pixels());
  for (std::size_t i = 0; i < d.pixels(); ++i) {
    f[i] = u(rng);
    ei[i] = e(rng);
    th[i] = 0.05 + 0.1 * u(rng);
  }
  const Frame f0(d, 0, f);
  const ChannelField ef(d, ChannelKind::integral, ei);
  const CameraModel m(ChannelField(d, ChannelKind::theta, th), 0.03);
  const Reconstruction fwd = reconstruct_next(f0, ef, m);
  REQUIRE(fwd.clamped_pixels == 0);
  const Reconstruction back = reconstruct_prev(fwd.frame, ef, m);
  for (std::size_t i = 0; i < d.pixels(); ++i) {
    CHECK(std::fabs(back.frame.values()[i] - f[i]) <= 1e-12);
  }
}

TEST_CASE("reconstruction rejects mismatched shapes and non-integral kinds")
{
  const Frame f(Dims{2, 2}, 0, {0.1, 0.2, 0.3, 0.4});
  const CameraModel m = CameraModel::uniform(Dims{2, 2}, 0.1, 0.0);
  CHECK_THROWS_AS(reconstruct_next(f, ChannelField::zeros(Dims{2, 1}, ChannelKind::integral), m), InvalidArgument);
  CHECK_THROWS_AS(reconstruct_next(f, ChannelField::zeros(Dims{2, 2}, ChannelKind::count), m), InvalidArgument);
  CHECK_THROWS_AS(reconstruct_next(f, ChannelField::zeros(Dims{2, 2}, ChannelKind::integral),
                                   CameraModel::uniform(Dims{1, 4}, 0.1, 0.0)),
                  InvalidArgument);
}

TEST_CASE("camera model validation")
{
  CHECK_THROWS_AS(CameraModel::uniform(k1, -0.1, 0.0), InvalidArgument);
  CHECK_THROWS_AS(CameraModel::uniform(k1, 0.1, -0.01), InvalidArgument);
  CHECK_THROWS_AS(CameraModel::uniform(k1, 0.1, std::nan("")), InvalidArgument);
  CHECK(CameraModel(ChannelField(k1, ChannelKind::count, {3}), 0.0).theta().kind() == ChannelKind::theta);
}

TEST_CASE("MAE: perfect, single pixel, empty, mismatched")
{
  const CameraModel m = CameraModel::uniform(k1, 0.1, 0.0);
  const ReconstructionCase same{px(0.4), px(0.4), integral(0)};
  CHECK(reconstruction_mae(std::span(&same, 1), m) == 0.0);

  const ReconstructionCase off{px(0.4), px(0.6), integral(0)};
  CHECK(reconstruction_mae(std::span(&off, 1), m) == doctest::Approx(0.2).epsilon(1e-15));

  CHECK_THROWS_AS(reconstruction_mae(std::span<const ReconstructionCase>{}, m), InvalidArgument);

  const ReconstructionCase bad{px(0.4), Frame(Dims{2, 1}, 0, {0.1, 0.2}), integral(0)};
  CHECK_THROWS_AS(reconstruction_mae(std::span(&bad, 1), m), InvalidArgument);
}

TEST_CASE("MAE uses unclamped predictions")
{
  // raw 1.6811..., target 1.0: clamped error would be 0
  const CameraModel m = CameraModel::uniform(k1, 0.2, 0.05);
  const ReconstructionCase c{px(0.9), px(1.0), integral(3)};
  CHECK(reconstruction_mae(std::span(&c, 1), m) == doctest::Approx(0.95 * std::exp(0.6) - 1.05).epsilon(1e-14));
}

TEST_CASE("ECAM round trip at float precision")
{
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  const Dims d{7, 5};
  std::vector<double> th(d.pixels());
  for (double & v : th) v = static_cast<float>(u(rng));  // exactly representable
  const CameraModel m(ChannelField(d, ChannelKind::theta, th), 0.0625);
  const Bytes b = write_camera_model(m);
  CHECK(b.size() == 4 + 4 + 8 + d.pixels() * 4 + 4);
  CHECK(parse_camera_model(b) == m);
  CHECK(write_camera_model(parse_camera_model(b)) == b);
}
