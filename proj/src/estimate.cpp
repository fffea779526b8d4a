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

#include "evkit/estimate.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "evkit/error.hpp"
#include "evkit/parallel.hpp"
#include "evkit/simd/kernels.hpp"
#include "evkit/transforms.hpp"

namespace evkit
{
TrainingPair::TrainingPair(Frame f0, Frame f1, EventStream stream)
: f0_(std::move(f0)), f1_(std::move(f1)), stream_(std::move(stream))
{
  if (f0_.dims() != f1_.dims() || f0_.dims() != stream_.dims()) {
    throw InvalidArgument("training pair: frame and stream dimensions differ");
  }
  if (f0_.t() >= f1_.t()) {
    throw InvalidArgument("training pair: f0 must precede f1");
  }
  if (stream_.window() != Window{f0_.t(), f1_.t()}) {
    throw InvalidArgument(
      "training pair: stream window [" + std::to_string(stream_.t_start()) + ", " +
      std::to_string(stream_.t_end()) + "] does not match frames [" + std::to_string(f0_.t()) +
      ", " + std::to_string(f1_.t()) + "]");
  }
  e_i_ = compute_e_i(stream_);
}

std::vector<TrainingPair> make_training_pairs(
  std::span<const Frame> frames, const EventStream & stream)
{
  if (frames.size() < 2) {
    throw InvalidArgument("make_training_pairs: need at least 2 frames");
  }
  std::vector<TrainingPair> pairs;
  pairs.reserve(frames.size() - 1);
  for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
    pairs.emplace_back(
      frames[i], frames[i + 1], slice_by_time(stream, frames[i].t(), frames[i + 1].t()));
  }
  return pairs;
}

namespace
{
double median_of(std::span<double> v)
{
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) {
    return upper;
  }
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

// Fills every pixel with valid == 0 from the median of valid neighbors:
// 3x3, then 5x5, then all valid pixels, then 0.
void median_fill(Dims dims, std::vector<double> & values, const std::vector<std::uint8_t> & valid)
{
  std::vector<double> buf;
  double global = 0.0;
  bool global_ready = false;
  for (std::size_t y = 0; y < dims.height; ++y) {
    for (std::size_t x = 0; x < dims.width; ++x) {
      const std::size_t i = dims.index(x, y);
      if (valid[i]) continue;
      bool filled = false;
      for (const std::size_t r : {std::size_t{1}, std::size_t{2}}) {
        buf.clear();
        const std::size_t y0 = y >= r ? y - r : 0;
        const std::size_t x0 = x >= r ? x - r : 0;
        const std::size_t y1 = std::min<std::size_t>(dims.height - 1, y + r);
        const std::size_t x1 = std::min<std::size_t>(dims.width - 1, x + r);
        for (std::size_t yy = y0; yy <= y1; ++yy) {
          for (std::size_t xx = x0; xx <= x1; ++xx) {
            const std::size_t j = dims.index(xx, yy);
            if (valid[j]) buf.push_back(values[j]);
          }
        }
        if (!buf.empty()) {
          values[i] = median_of(buf);
          filled = true;
          break;
        }
      }
      if (filled) continue;
      if (!global_ready) {
        std::vector<double> all;
        for (std::size_t j = 0; j < values.size(); ++j) {
          if (valid[j]) all.push_back(values[j]);
        }
        global = all.empty() ? 0.0 : median_of(all);
        global_ready = true;
      }
      values[i] = global;
    }
  }
}

// Closed-form threshold samples of one pair. valid marks active pixels whose
// estimate is non-negative.
struct ClosedForm
{
  std::vector<double> theta;
  std::vector<std::uint8_t> valid;
};

ClosedForm closed_form(const TrainingPair & pair, double k)
{
  const Dims dims = pair.dims();
  const auto a = pair.f0().values();
  const auto b = pair.f1().values();
  const auto e = pair.e_i().values();
  ClosedForm cf;
  cf.theta.assign(dims.pixels(), 0.0);
  cf.valid.assign(dims.pixels(), 0);
  for (std::size_t i = 0; i < dims.pixels(); ++i) {
    if (e[i] == 0.0) continue;
    const double lo = a[i] + k;
    const double hi = b[i] + k;
    if (lo <= 0.0 || hi <= 0.0) {
      throw DomainError(i % dims.width, i / dims.width, "ln of zero intensity (f + k == 0)");
    }
    const double t = std::log(hi / lo) / e[i];
    if (t >= 0.0) {
      cf.theta[i] = t;
      cf.valid[i] = 1;
    }
  }
  return cf;
}

// One threshold field from several pairs (see fit_camera).
std::vector<double> aggregate_theta(
  std::span<const TrainingPair> pairs, std::span<const std::size_t> which, double k)
{
  const Dims dims = pairs[which.front()].dims();
  const std::size_t npx = dims.pixels();
  std::vector<ClosedForm> forms;
  forms.reserve(which.size());
  for (const std::size_t idx : which) {
    forms.push_back(closed_form(pairs[idx], k));
  }
  std::vector<double> theta(npx, 0.0);
  std::vector<std::uint8_t> valid(npx, 0);
  std::vector<double> samples;
  for (std::size_t i = 0; i < npx; ++i) {
    samples.clear();
    for (const ClosedForm & cf : forms) {
      if (cf.valid[i]) samples.push_back(cf.theta[i]);
    }
    if (!samples.empty()) {
      theta[i] = samples.size() == 1 ? samples[0] : median_of(samples);
      valid[i] = 1;
    }
  }
  median_fill(dims, theta, valid);
  return theta;
}

struct Split
{
  std::vector<std::size_t> fit;
  std::vector<std::size_t> heldout;
  bool shared{false};
};

Split split_pairs(std::size_t n)
{
  Split s;
  for (std::size_t i = 0; i < n; ++i) {
    (i % 2 == 0 ? s.fit : s.heldout).push_back(i);
  }
  if (s.heldout.empty()) {
    s.heldout = s.fit;
    s.shared = true;
  }
  return s;
}

struct LossSample
{
  double k{0.0};
  double loss{std::numeric_limits<double>::infinity()};
  std::size_t clamp{0};
};

LossSample heldout_loss(std::span<const TrainingPair> pairs, const Split & split, double k)
{
  LossSample s;
  s.k = k;
  try {
    const std::vector<double> theta = aggregate_theta(pairs, split.fit, k);
    double total = 0.0;
    std::size_t count = 0;
    std::vector<double> pred;
    for (const std::size_t idx : split.heldout) {
      const TrainingPair & p = pairs[idx];
      pred.resize(theta.size());
      predict_unclamped(p.f0().values(), theta, p.e_i().values(), k, pred);
      total += simd::abs_diff_sum(pred, p.f1().values());
      count += pred.size();
      s.clamp += simd::clamp_unit(pred);
    }
    s.loss = count == 0 ? 0.0 : total / static_cast<double>(count);
  } catch (const DomainError &) {
    s.loss = std::numeric_limits<double>::infinity();
  }
  return s;
}

std::vector<double> search_grid(double k_min, double k_max, std::size_t points)
{
  std::vector<double> grid;
  points = std::max<std::size_t>(points, 2);
  double lo = k_min;
  if (k_min == 0.0) {
    grid.push_back(0.0);
    lo = 1e-4;
  }
  if (lo >= k_max) {
    // range too narrow for a log grid above 1e-4: fall back to linear spacing
    grid.clear();
    for (std::size_t i = 0; i < points; ++i) {
      grid.push_back(k_min + (k_max - k_min) * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    return grid;
  }
  const double ratio = std::log(k_max / lo);
  for (std::size_t i = 0; i < points; ++i) {
    grid.push_back(lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(points - 1)));
  }
  grid.back() = k_max;
  if (k_min > 0.0) grid.front() = k_min;
  return grid;
}

bool better(const LossSample & a, const LossSample & b)
{
  return a.loss < b.loss || (a.loss == b.loss && a.k < b.k);
}

std::string shortest(double v)
{
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}
}  // namespace

ChannelField estimate_theta_given_k(const TrainingPair & pair, double k)
{
  ClosedForm cf = closed_form(pair, k);
  const auto e = pair.e_i().values();
  // median_fill touches only pixels with valid == 0; keep floored negatives at 0
  std::vector<std::uint8_t> keep = cf.valid;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (e[i] != 0.0) keep[i] = 1;
  }
  std::vector<double> values = cf.theta;
  // Fill from valid estimates only: mask negatives out of the neighborhood.
  std::vector<double> filled = values;
  median_fill(pair.dims(), filled, cf.valid);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!keep[i]) values[i] = filled[i];
  }
  return ChannelField(pair.dims(), ChannelKind::theta, std::move(values));
}

KEstimate estimate_k(std::span<const TrainingPair> pairs, const KSearchConfig & config)
{
  if (pairs.empty()) {
    throw InvalidArgument("estimate_k: no training pairs");
  }
  if (!(std::isfinite(config.k_min) && std::isfinite(config.k_max) && config.k_min >= 0.0 &&
        config.k_min < config.k_max)) {
    throw InvalidArgument("estimate_k: need 0 <= k_min < k_max");
  }
  if (!(config.tolerance > 0.0)) {
    throw InvalidArgument("estimate_k: tolerance must be > 0");
  }
  for (const TrainingPair & p : pairs) {
    if (p.dims() != pairs.front().dims()) {
      throw InvalidArgument("estimate_k: training pairs differ in dimensions");
    }
  }

  const Split split = split_pairs(pairs.size());
  const std::vector<double> grid = search_grid(config.k_min, config.k_max, config.grid_points);
  std::vector<LossSample> coarse(grid.size());
  const std::size_t workers = config.workers == 0 ? worker_count() : config.workers;
  parallel_for(grid.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      coarse[i] = heldout_loss(pairs, split, grid[i]);
    }
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < coarse.size(); ++i) {
    if (better(coarse[i], coarse[best])) best = i;
  }
  if (!std::isfinite(coarse[best].loss)) {
    throw DomainError(0, 0, "estimate_k: ln undefined for every candidate k");
  }

  std::vector<LossSample> seen(coarse.begin(), coarse.end());
  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[std::min(best + 1, grid.size() - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  LossSample fc = heldout_loss(pairs, split, c);
  LossSample fd = heldout_loss(pairs, split, d);
  seen.push_back(fc);
  seen.push_back(fd);
  while (b - a > config.tolerance) {
    if (fc.loss <= fd.loss) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = heldout_loss(pairs, split, c);
      seen.push_back(fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = heldout_loss(pairs, split, d);
      seen.push_back(fd);
    }
  }
  seen.push_back(heldout_loss(pairs, split, 0.5 * (a + b)));

  LossSample win = seen.front();
  for (const LossSample & s : seen) {
    if (better(s, win)) win = s;
  }
  KEstimate out;
  out.k = win.k;
  out.loss = win.loss;
  out.clamp_count = win.clamp;
  out.shared_split = split.shared;
  out.evaluations = seen.size();
  out.at_boundary =
    win.k - config.k_min <= config.tolerance || config.k_max - win.k <= config.tolerance;
  return out;
}

KEstimate estimate_k(
  std::span<const TrainingPair> pairs, double k_min, double k_max, double tolerance)
{
  KSearchConfig cfg;
  cfg.k_min = k_min;
  cfg.k_max = k_max;
  cfg.tolerance = tolerance;
  return estimate_k(pairs, cfg);
}

ChannelField refine_integral(const TrainingPair & pair, const CameraModel & model)
{
  if (model.dims() != pair.dims()) {
    throw InvalidArgument("refine_integral: model dimensions differ from the pair");
  }
  const ChannelField ratio = log_intensity_ratio(pair.f0(), pair.f1(), model.k());
  const auto r = ratio.values();
  const auto theta = model.theta().values();
  const auto e = pair.e_i().values();
  std::vector<double> out(r.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = theta[i] > kThetaEpsilon ? r[i] / theta[i] : e[i];
  }
  return ChannelField(pair.dims(), ChannelKind::refined_integral, std::move(out));
}

EvRepSL assemble_evrepsl(const EvRep & rep, const ChannelField & refined, const ChannelField & theta)
{
  const Dims dims = rep.dims();
  if (rep.e_i.dims() != dims || rep.e_t.dims() != dims || refined.dims() != dims ||
      theta.dims() != dims) {
    throw InvalidArgument("assemble_evrepsl: channel dimensions differ");
  }
  for (const double v : theta.values()) {
    if (!(v >= 0.0)) {
      throw InvalidArgument("assemble_evrepsl: negative threshold " + std::to_string(v));
    }
  }
  return EvRepSL{
    rep.e_i, rep.e_c, rep.e_t, refined.as(ChannelKind::refined_integral),
    theta.as(ChannelKind::theta)};
}

Tensor to_tensor(const EvRepSL & rep)
{
  const std::array<ChannelField, 5> fields{rep.e_i, rep.e_c, rep.e_t, rep.e_i_refined, rep.theta};
  return to_tensor(fields);
}

FitResult fit_camera(std::span<const TrainingPair> pairs, const KSearchConfig & config)
{
  FitResult fit;
  fit.search = estimate_k(pairs, config);

  std::vector<std::size_t> all(pairs.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<double> theta = aggregate_theta(pairs, all, fit.search.k);
  fit.model = CameraModel(ChannelField(pairs.front().dims(), ChannelKind::theta, std::move(theta)), fit.search.k);

  std::vector<std::uint8_t> active(pairs.front().dims().pixels(), 0);
  for (const TrainingPair & p : pairs) {
    const auto e = p.e_i().values();
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (e[i] != 0.0) active[i] = 1;
    }
  }
  fit.pixels_active = static_cast<std::size_t>(std::count(active.begin(), active.end(), 1));
  fit.mae_heldout = fit.search.loss;
  fit.clamp_count = fit.search.clamp_count;

  if (fit.search.shared_split) {
    fit.warnings.push_back("only one training pair: held-out set equals the fit set");
  }
  if (fit.search.at_boundary) {
    fit.warnings.push_back(
      "k_hat " + shortest(fit.search.k) + " is at the search boundary [" +
      shortest(config.k_min) + ", " + shortest(config.k_max) + "]");
  }
  return fit;
}

std::string format_fit_report(const FitResult & fit)
{
  return "k_hat=" + shortest(fit.model.k()) + "\nmae_heldout=" + shortest(fit.mae_heldout) +
         "\npixels_active=" + std::to_string(fit.pixels_active) +
         "\nclamp_count=" + std::to_string(fit.clamp_count) + "\n";
}

}  // namespace evkit
