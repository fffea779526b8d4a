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

#include "evkit/camera_io.hpp"

#include <array>
#include <string>
#include <vector>

#include "evkit/error.hpp"
#include "evkit/simd/kernels.hpp"

namespace evkit
{
namespace
{
constexpr std::array<std::uint8_t, 4> kEcamMagic{0x45, 0x43, 0x41, 0x4d};
}

Bytes write_camera_model(const CameraModel & model)
{
  const auto theta = model.theta().values();
  std::vector<float> narrow(theta.size());
  if (!narrow.empty()) {
    simd::kernels().narrow_f32(theta.data(), theta.size(), narrow.data());
  }
  ByteWriter w;
  w.reserve(4 + 4 + 8 + narrow.size() * 4 + 4);
  w.magic(kEcamMagic);
  w.u16(model.dims().width);
  w.u16(model.dims().height);
  w.f64(model.k());
  for (const float v : narrow) w.f32(v);
  return std::move(w).finish_with_crc();
}

CameraModel parse_camera_model(std::span<const std::uint8_t> data)
{
  ByteReader(data).expect_magic(kEcamMagic, "ECAM");
  ByteReader r(strip_verified_crc(data));
  r.expect_magic(kEcamMagic, "ECAM");
  Dims dims;
  dims.width = r.u16();
  dims.height = r.u16();
  const double k = r.f64();
  r.require_remaining(dims.pixels() * 4, "theta field");
  std::vector<double> theta(dims.pixels());
  for (double & v : theta) v = r.f32();
  try {
    return CameraModel(ChannelField(dims, ChannelKind::theta, std::move(theta)), k);
  } catch (const InvalidArgument & e) {
    throw FormatError(std::string("invalid ECAM content: ") + e.what());
  }
}

}  // namespace evkit
