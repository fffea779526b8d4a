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

#include "evkit/frame.hpp"

#include <string>

#include "evkit/error.hpp"

namespace evkit
{
Frame::Frame(Dims dims, std::uint64_t t, std::vector<double> values)
: dims_(dims), t_(t), values_(std::move(values))
{
  if (values_.size() != dims_.pixels()) {
    throw InvalidArgument(
      "frame has " + std::to_string(values_.size()) + " values, expected " +
      std::to_string(dims_.pixels()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    // written so that NaN also fails
    if (!(values_[i] >= 0.0 && values_[i] <= 1.0)) {
      throw InvalidArgument(
        "frame value " + std::to_string(values_[i]) + " outside [0, 1] at pixel (" +
        std::to_string(i % dims_.width) + ", " + std::to_string(i / dims_.width) + ")");
    }
  }
}

Frame Frame::with_time(std::uint64_t t) const
{
  Frame f = *this;
  f.t_ = t;
  return f;
}

}  // namespace evkit
