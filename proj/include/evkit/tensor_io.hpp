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

#ifndef EVKIT_TENSOR_IO_HPP
#define EVKIT_TENSOR_IO_HPP

#include <span>
#include <vector>

#include "evkit/bytes.hpp"
#include "evkit/channel.hpp"
#include "evkit/evrep.hpp"

namespace evkit
{
/// Multi-channel float32 raster, the in-memory form of an EVRP file.
struct Tensor
{
  Dims dims{};
  std::vector<std::vector<float>> channels;  // each dims.pixels() long, row-major

  bool operator==(const Tensor &) const = default;
};

/// Narrows each field to float32, keeping the given order.
Tensor to_tensor(std::span<const ChannelField> fields);
/// Channels E_I, E_C, E_T.
Tensor to_tensor(const EvRep & rep);

/// EVRP container:
///   "EVRP" | u16 width | u16 height | u16 channels |
///   channels x pixels x f32 (row-major, little-endian) | u32 CRC-32
Bytes write_tensor(const Tensor & tensor);
Tensor parse_tensor(std::span<const std::uint8_t> data);

}  // namespace evkit
#endif  // EVKIT_TENSOR_IO_HPP
