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

#include "evkit/tensor_io.hpp"

#include <array>
#include <string>

#include "evkit/error.hpp"
#include "evkit/simd/kernels.hpp"

namespace evkit
{
namespace
{
constexpr std::array<std::uint8_t, 4> kEvrpMagic{0x45, 0x56, 0x52, 0x50};
}

Tensor to_tensor(std::span<const ChannelField> fields)
{
  Tensor t;
  if (fields.empty()) {
    return t;
  }
  t.dims = fields.front().dims();
  for (const ChannelField & f : fields) {
    if (f.dims() != t.dims) {
      throw InvalidArgument("to_tensor: channel dimensions differ");
    }
    std::vector<float> c(f.values().size());
    if (!c.empty()) {
      simd::kernels().narrow_f32(f.values().data(), c.size(), c.data());
    }
    t.channels.push_back(std::move(c));
  }
  return t;
}

Tensor to_tensor(const EvRep & rep)
{
  const std::array<ChannelField, 3> fields{rep.e_i, rep.e_c, rep.e_t};
  return to_tensor(fields);
}

Bytes write_tensor(const Tensor & tensor)
{
  if (tensor.channels.size() > 0xffff) {
    throw InvalidArgument("write_tensor: too many channels");
  }
  for (const auto & c : tensor.channels) {
    if (c.size() != tensor.dims.pixels()) {
      throw InvalidArgument("write_tensor: channel size does not match dimensions");
    }
  }
  ByteWriter w;
  w.reserve(10 + tensor.channels.size() * tensor.dims.pixels() * 4 + 4);
  w.magic(kEvrpMagic);
  w.u16(tensor.dims.width);
  w.u16(tensor.dims.height);
  w.u16(static_cast<std::uint16_t>(tensor.channels.size()));
  for (const auto & c : tensor.channels) {
    for (const float v : c) w.f32(v);
  }
  return std::move(w).finish_with_crc();
}

Tensor parse_tensor(std::span<const std::uint8_t> data)
{
  ByteReader(data).expect_magic(kEvrpMagic, "EVRP");
  ByteReader r(strip_verified_crc(data));
  r.expect_magic(kEvrpMagic, "EVRP");
  Tensor t;
  t.dims.width = r.u16();
  t.dims.height = r.u16();
  const std::size_t nch = r.u16();
  r.require_remaining(nch * t.dims.pixels() * 4, "channel data");
  t.channels.resize(nch);
  for (auto & c : t.channels) {
    c.resize(t.dims.pixels());
    for (float & v : c) v = r.f32();
  }
  return t;
}

}  // namespace evkit
