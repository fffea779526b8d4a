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

#ifndef EVKIT_FRAME_HPP
#define EVKIT_FRAME_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "evkit/event.hpp"

namespace evkit
{
/// Normalized grayscale image, row-major, every value in [0, 1].
class Frame
{
public:
  Frame() = default;
  /// Throws InvalidArgument on a size mismatch or a value outside [0, 1].
  Frame(Dims dims, std::uint64_t t, std::vector<double> values);

  Dims dims() const { return dims_; }
  std::uint16_t width() const { return dims_.width; }
  std::uint16_t height() const { return dims_.height; }
  std::uint64_t t() const { return t_; }
  std::span<const double> values() const { return values_; }
  double at(std::size_t x, std::size_t y) const { return values_[dims_.index(x, y)]; }

  /// Same pixels, different timestamp.
  Frame with_time(std::uint64_t t) const;

  bool operator==(const Frame &) const = default;

private:
  Dims dims_{};
  std::uint64_t t_{0};
  std::vector<double> values_;
};

}  // namespace evkit
#endif  // EVKIT_FRAME_HPP
