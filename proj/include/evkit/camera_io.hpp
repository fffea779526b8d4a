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

#ifndef EVKIT_CAMERA_IO_HPP
#define EVKIT_CAMERA_IO_HPP

#include <span>

#include "evkit/bytes.hpp"
#include "evkit/frame_event.hpp"

namespace evkit
{
/// ECAM container:
///   "ECAM" | u16 width | u16 height | f64 k | pixels x f32 theta | u32 CRC-32
/// theta is stored at float32 precision.
Bytes write_camera_model(const CameraModel & model);
CameraModel parse_camera_model(std::span<const std::uint8_t> data);

}  // namespace evkit
#endif  // EVKIT_CAMERA_IO_HPP
