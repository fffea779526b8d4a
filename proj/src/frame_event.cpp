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

#include "evkit/frame_event.hpp"

#include <cmath>
#include <string>

#include "evkit/error.hpp"
#include "evkit/simd/kernels.hpp"

namespace evkit
{
CameraModel::CameraModel(ChannelField theta, double k)
: theta_(theta.kind() == ChannelKind::theta ? std::move(theta) : theta.as(ChannelKind::theta)),
  k_(k)
{
  if (!std::isfinite(k_) || k_ < 0.0) {
    throw InvalidArgument("camera model: k must be finite and >= 0, got " + std::to_string(k_));
  }
}

CameraModel CameraModel::uniform(Dims dims, double theta, double k)
{
  return CameraModel(ChannelField::filled(dims, ChannelKind::theta, theta), k);
}

ChannelField log_intensity_ratio(const Frame & f0, const Frame & f1, double k)
{
  if (f0.dims() != f1.dims()) {
    throw InvalidArgument("log_intensity_ratio: frame dimensions differ");
  }
  if (!std::isfinite(k) || k < 0.0) {
    throw InvalidArgument("log_intensity_ratio: k must be finite and >= 0");
  }
  const auto a = f0.values();
  const auto b = f1.values();
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double lo = a[i] + k;
    const double hi = b[i] + k;
    if (lo <= 0.0 || hi <= 0.0) {
      throw DomainError(i % f0.width(), i / f0.width(), "ln of zero intensity (f + k == 0)");
    }
    out[i] = std::log(hi / lo);
  }
  return ChannelField(f0.dims(), ChannelKind::refined_integral, std::move(out));
}

void predict_unclamped(
  std::span<const double> f0, std::span<const double> theta, std::span<const double> integral,
  double k, std::span<double> out)
{
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = theta[i] * integral[i];
    // no change must reproduce f0 bit-for-bit
    out[i] = x == 0.0 ? f0[i] : std::exp(x) * (f0[i] + k) - k;
  }
}

namespace
{
void check_shapes(const Frame & f, const ChannelField & integral, const CameraModel & model)
{
  if (f.dims() != integral.dims() || f.dims() != model.dims()) {
    throw InvalidArgument("reconstruction: frame, integral and model dimensions differ");
  }
  if (integral.kind() != ChannelKind::integral && integral.kind() != ChannelKind::refined_integral) {
    throw InvalidArgument("reconstruction: expected an integral field");
  }
}

Reconstruction reconstruct(
  const Frame & from, std::span<const double> integral, const CameraModel & model)
{
  Reconstruction r;
  r.raw.resize(from.values().size());
  predict_unclamped(from.values(), model.theta().values(), integral, model.k(), r.raw);
  std::vector<double> clamped = r.raw;
  r.clamped_pixels = simd::clamp_unit(clamped);
  r.frame = Frame(from.dims(), from.t(), std::move(clamped));
  return r;
}
}  // namespace

Reconstruction reconstruct_next(
  const Frame & f0, const ChannelField & integral, const CameraModel & model)
{
  check_shapes(f0, integral, model);
  return reconstruct(f0, integral.values(), model);
}

Reconstruction reconstruct_prev(
  const Frame & f1, const ChannelField & integral, const CameraModel & model)
{
  check_shapes(f1, integral, model);
  std::vector<double> negated(integral.values().begin(), integral.values().end());
  for (double & v : negated) v = -v;
  return reconstruct(f1, negated, model);
}

double reconstruction_mae(std::span<const ReconstructionCase> cases, const CameraModel & model)
{
  if (cases.empty()) {
    throw InvalidArgument("reconstruction_mae: no frame pairs");
  }
  double total = 0.0;
  std::size_t count = 0;
  std::vector<double> pred;
  for (const ReconstructionCase & c : cases) {
    check_shapes(c.f0, c.integral, model);
    if (c.f1.dims() != c.f0.dims()) {
      throw InvalidArgument("reconstruction_mae: f0 and f1 dimensions differ");
    }
    pred.resize(c.f0.values().size());
    predict_unclamped(c.f0.values(), model.theta().values(), c.integral.values(), model.k(), pred);
    total += simd::abs_diff_sum(pred, c.f1.values());
    count += pred.size();
  }
  return count == 0 ? 0.0 : total / static_cast<double>(count);
}

}  // namespace evkit
