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

#ifndef EVKIT_FRAME_EVENT_HPP
#define EVKIT_FRAME_EVENT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "evkit/channel.hpp"
#include "evkit/frame.hpp"

namespace evkit
{
/// Per-pixel contrast threshold theta (log-intensity units) and the scalar
/// intensity offset k of the linear sensor model I = a f + b, k = b / a.
/// One model describes one frame interval.
class CameraModel
{
public:
  CameraModel() = default;
  /// `theta` is re-tagged as a theta field; throws if any value is negative
  /// or k is negative or not finite.
  CameraModel(ChannelField theta, double k);
  static CameraModel uniform(Dims dims, double theta, double k);

  const ChannelField & theta() const { return theta_; }
  double k() const { return k_; }
  Dims dims() const { return theta_.dims(); }

  bool operator==(const CameraModel &) const = default;

private:
  ChannelField theta_;
  double k_{0.0};
};

/// ln((f1 + k) / (f0 + k)) per pixel. Returned as a refined_integral field
/// (real-valued, unconstrained). Throws DomainError naming the first pixel
/// where f + k == 0.
ChannelField log_intensity_ratio(const Frame & f0, const Frame & f1, double k);

/// Output of a reconstruction: the clamped frame plus what clamping did.
struct Reconstruction
{
  Frame frame;                 // clamped to [0, 1], timestamp of the input frame
  std::vector<double> raw;     // before clamping
  std::size_t clamped_pixels{0};
};

/// f1 = exp(theta * E) * (f0 + k) - k. `integral` may be an integer E_I or a
/// refined (real-valued) integral.
Reconstruction reconstruct_next(
  const Frame & f0, const ChannelField & integral, const CameraModel & model);

/// f0 = exp(-theta * E) * (f1 + k) - k; identical to reconstruct_next with the
/// integral negated.
Reconstruction reconstruct_prev(
  const Frame & f1, const ChannelField & integral, const CameraModel & model);

/// Unclamped forward prediction over raw arrays (all of length n).
void predict_unclamped(
  std::span<const double> f0, std::span<const double> theta, std::span<const double> integral,
  double k, std::span<double> out);

struct ReconstructionCase
{
  Frame f0;
  Frame f1;
  ChannelField integral;
};

/// Mean over all cases and pixels of |f1_hat - f1|, using unclamped f1_hat.
/// Throws InvalidArgument on an empty sequence or mismatched dimensions.
double reconstruction_mae(std::span<const ReconstructionCase> cases, const CameraModel & model);

}  // namespace evkit
#endif  // EVKIT_FRAME_EVENT_HPP
