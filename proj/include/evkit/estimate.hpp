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

#ifndef EVKIT_ESTIMATE_HPP
#define EVKIT_ESTIMATE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "evkit/channel.hpp"
#include "evkit/event.hpp"
#include "evkit/evrep.hpp"
#include "evkit/frame.hpp"
#include "evkit/frame_event.hpp"
#include "evkit/tensor_io.hpp"

namespace evkit
{
/// Thresholds at or below this fall back to the raw integral in refine_integral.
inline constexpr double kThetaEpsilon = 1e-6;

/// Two consecutive frames and the events between them.
///
/// The stream window must be [f0.t, f1.t] and all three must share
/// dimensions. E_I is computed once on construction.
class TrainingPair
{
public:
  TrainingPair(Frame f0, Frame f1, EventStream stream);

  const Frame & f0() const { return f0_; }
  const Frame & f1() const { return f1_; }
  const EventStream & stream() const { return stream_; }
  const ChannelField & e_i() const { return e_i_; }
  Dims dims() const { return f0_.dims(); }

private:
  Frame f0_;
  Frame f1_;
  EventStream stream_;
  ChannelField e_i_;
};

/// Consecutive frame pairs, each with stream events sliced to [t_i, t_{i+1}).
std::vector<TrainingPair> make_training_pairs(
  std::span<const Frame> frames, const EventStream & stream);

/// Closed-form threshold for one pair given k.
///
/// Where E_I != 0: ln((f1 + k) / (f0 + k)) / E_I, floored at 0 (a negative
/// value means the frames moved against the events, i.e. noise). Where
/// E_I == 0: median of the non-negative estimates in the 3x3 neighborhood,
/// else 5x5, else the whole image, else 0.
ChannelField estimate_theta_given_k(const TrainingPair & pair, double k);

struct KSearchConfig
{
  double k_min{0.0};
  double k_max{2.0};
  double tolerance{1e-9};    // final golden-section bracket width
  std::size_t grid_points{33};
  std::size_t workers{0};    // 0 = worker_count()
};

struct KEstimate
{
  double k{0.0};
  double loss{0.0};            // held-out MAE at k
  std::size_t clamp_count{0};  // held-out pixels the clamped reconstruction changes
  bool at_boundary{false};     // k is within tolerance of k_min or k_max
  bool shared_split{false};    // a single pair served as both fit and held-out set
  std::size_t evaluations{0};
};

/// Scalar search for the offset k.
///
/// Loss L(k): thresholds are fitted on the even-indexed pairs (per-pixel
/// median of closed-form estimates, neighborhood-median fill), then the
/// unclamped reconstruction MAE is measured on the odd-indexed pairs. With a
/// single pair it is used for both. Search: a log-spaced grid of
/// `grid_points` values in [max(k_min, 1e-4), k_max] (plus 0 when
/// k_min == 0), then golden-section refinement on the bracket around the
/// best grid point. The returned k has the lowest loss of every point
/// evaluated; ties go to the smaller k. Candidates where ln() is undefined
/// (k == 0 with black pixels) count as infinite loss.
KEstimate estimate_k(std::span<const TrainingPair> pairs, const KSearchConfig & config);
KEstimate estimate_k(
  std::span<const TrainingPair> pairs, double k_min, double k_max, double tolerance);

/// Continuous integral ln((f1 + k) / (f0 + k)) / theta where theta >
/// kThetaEpsilon, raw E_I elsewhere.
ChannelField refine_integral(const TrainingPair & pair, const CameraModel & model);

/// {E_I, E_C, E_T, refined E_I, theta}.
struct EvRepSL
{
  ChannelField e_i;
  ChannelField e_c;
  ChannelField e_t;
  ChannelField e_i_refined;
  ChannelField theta;

  Dims dims() const { return e_c.dims(); }
};

/// Throws InvalidArgument on mismatched dimensions or a negative theta.
EvRepSL assemble_evrepsl(const EvRep & rep, const ChannelField & refined, const ChannelField & theta);

/// Five channels in EvRepSL order.
Tensor to_tensor(const EvRepSL & rep);

struct FitResult
{
  CameraModel model;
  double mae_heldout{0.0};
  std::size_t pixels_active{0};  // pixels with E_I != 0 in at least one pair
  std::size_t clamp_count{0};
  KEstimate search;
  std::vector<std::string> warnings;
};

/// estimate_k, then one threshold field from all pairs: per-pixel median of
/// the non-negative closed-form estimates over pairs where the pixel was
/// active, neighborhood-median fill elsewhere.
FitResult fit_camera(std::span<const TrainingPair> pairs, const KSearchConfig & config = {});

/// key=value lines: k_hat, mae_heldout, pixels_active, clamp_count.
std::string format_fit_report(const FitResult & fit);

}  // namespace evkit
#endif  // EVKIT_ESTIMATE_HPP
