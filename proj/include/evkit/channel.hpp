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

#ifndef EVKIT_CHANNEL_HPP
#define EVKIT_CHANNEL_HPP

#include <span>
#include <string_view>
#include <vector>

#include "evkit/event.hpp"

namespace evkit
{
enum class ChannelKind { count, integral, temporal, refined_integral, theta };

std::string_view to_string(ChannelKind kind);

/// Per-pixel real-valued map, row-major.
///
/// The constructor enforces the per-kind invariants that can be checked
/// locally: counts are non-negative integers, temporal and theta values are
/// non-negative, and nothing is NaN. The |integral| <= count relation spans two
/// fields and is checked by EvRep consumers instead.
class ChannelField
{
public:
  ChannelField() = default;
  ChannelField(Dims dims, ChannelKind kind, std::vector<double> values);

  /// All-zero field.
  static ChannelField zeros(Dims dims, ChannelKind kind);
  /// Constant field. Throws if `value` violates the kind's invariant.
  static ChannelField filled(Dims dims, ChannelKind kind, double value);

  Dims dims() const { return dims_; }
  std::uint16_t width() const { return dims_.width; }
  std::uint16_t height() const { return dims_.height; }
  ChannelKind kind() const { return kind_; }
  std::span<const double> values() const { return values_; }
  double at(std::size_t x, std::size_t y) const { return values_[dims_.index(x, y)]; }

  /// Same values tagged with another kind (re-validated).
  ChannelField as(ChannelKind kind) const;
  /// Per-pixel negation. Only valid for integral kinds.
  ChannelField negated() const;

  bool operator==(const ChannelField &) const = default;

private:
  Dims dims_{};
  ChannelKind kind_{ChannelKind::integral};
  std::vector<double> values_;
};

}  // namespace evkit
#endif  // EVKIT_CHANNEL_HPP
