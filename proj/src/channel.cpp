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

#include "evkit/channel.hpp"

#include <cmath>
#include <string>

#include "evkit/error.hpp"

namespace evkit
{
std::string_view to_string(ChannelKind kind)
{
  switch (kind) {
    case ChannelKind::count:
      return "count";
    case ChannelKind::integral:
      return "integral";
    case ChannelKind::temporal:
      return "temporal";
    case ChannelKind::refined_integral:
      return "refined_integral";
    case ChannelKind::theta:
      return "theta";
  }
  return "unknown";
}

ChannelField::ChannelField(Dims dims, ChannelKind kind, std::vector<double> values)
: dims_(dims), kind_(kind), values_(std::move(values))
{
  if (values_.size() != dims_.pixels()) {
    throw InvalidArgument(
      std::string(to_string(kind_)) + " field has " + std::to_string(values_.size()) +
      " values, expected " + std::to_string(dims_.pixels()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    bool ok = !std::isnan(v);
    switch (kind_) {
      case ChannelKind::count:
        ok = ok && v >= 0.0 && std::floor(v) == v;
        break;
      case ChannelKind::temporal:
      case ChannelKind::theta:
        ok = ok && v >= 0.0;
        break;
      case ChannelKind::integral:
        ok = ok && std::floor(v) == v;
        break;
      case ChannelKind::refined_integral:
        break;
    }
    if (!ok) {
      throw InvalidArgument(
        "invalid " + std::string(to_string(kind_)) + " value " + std::to_string(v) +
        " at pixel (" + std::to_string(i % dims_.width) + ", " + std::to_string(i / dims_.width) +
        ")");
    }
  }
}

ChannelField ChannelField::zeros(Dims dims, ChannelKind kind)
{
  return ChannelField(dims, kind, std::vector<double>(dims.pixels(), 0.0));
}

ChannelField ChannelField::filled(Dims dims, ChannelKind kind, double value)
{
  return ChannelField(dims, kind, std::vector<double>(dims.pixels(), value));
}

ChannelField ChannelField::as(ChannelKind kind) const { return ChannelField(dims_, kind, values_); }

ChannelField ChannelField::negated() const
{
  if (kind_ != ChannelKind::integral && kind_ != ChannelKind::refined_integral) {
    throw InvalidArgument("only integral fields can be negated");
  }
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = -values_[i];
  }
  return ChannelField(dims_, kind_, std::move(out));
}

}  // namespace evkit
