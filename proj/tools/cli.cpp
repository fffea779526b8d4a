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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evkit/bench.hpp"
#include "evkit/bytes.hpp"
#include "evkit/camera_io.hpp"
#include "evkit/error.hpp"
#include "evkit/estimate.hpp"
#include "evkit/event_io.hpp"
#include "evkit/evrep.hpp"
#include "evkit/image_io.hpp"
#include "evkit/simd/kernels.hpp"
#include "evkit/simulator.hpp"
#include "evkit/tensor_io.hpp"
#include "evkit/transforms.hpp"

namespace evkit::cli
{
namespace
{
namespace fs = std::filesystem;

// Flag combinations CLI11 cannot express; reported with exit status 2.
struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string num(double v)
{
  char buf[64];
  return std::string(buf, std::to_chars(buf, buf + sizeof(buf), v).ptr);
}

std::string summary(const EventStream & s)
{
  return "events=" + std::to_string(s.size()) + " window=[" + std::to_string(s.t_start()) + "," +
         std::to_string(s.t_end()) + "] dims=" + std::to_string(s.width()) + "x" +
         std::to_string(s.height());
}

TemporalMode parse_temporal(const std::string & name)
{
  return name == "conventional" ? TemporalMode::conventional : TemporalMode::literal;
}

ZeroPolarity parse_zero(const std::string & name)
{
  return name == "reject" ? ZeroPolarity::reject : ZeroPolarity::negative;
}

// EVT1 carries its own geometry; text needs it from flags (or a frame).
EventStream load_any_events(const fs::path & path, std::optional<Dims> dims, ZeroPolarity zero)
{
  const Bytes data = read_file(path);
  if (looks_like_evt1(data)) {
    return parse_binary_events(data);
  }
  if (!dims) {
    throw UsageError("text event input " + path.string() + " needs --width and --height");
  }
  return parse_text_events(
    std::string_view(reinterpret_cast<const char *>(data.data()), data.size()), *dims, zero);
}

std::optional<Dims> flag_dims(int width, int height)
{
  if (width <= 0 && height <= 0) return std::nullopt;
  if (width <= 0 || height <= 0) throw UsageError("--width and --height go together");
  return Dims{static_cast<std::uint16_t>(width), static_cast<std::uint16_t>(height)};
}

void write_text(const fs::path & path, const std::string & text)
{
  write_file(path, std::span(reinterpret_cast<const std::uint8_t *>(text.data()), text.size()));
}

// ---------------------------------------------------------------- convert
struct ConvertArgs
{
  std::string input;
  std::string output;
  int width{0};
  int height{0};
  bool text{false};
  bool evrep{false};
  bool evrepsl{false};
  std::string camera;
  std::string f0;
  std::string f1;
  std::optional<std::uint64_t> t0;
  std::optional<std::uint64_t> t1;
  std::string zero{"negative"};
  std::string temporal{"literal"};
};

int cmd_convert(const ConvertArgs & a, std::ostream & out)
{
  if (static_cast<int>(a.text) + a.evrep + a.evrepsl > 1) {
    throw UsageError("choose at most one of --text, --evrep, --evrepsl");
  }
  if (a.evrepsl && a.camera.empty()) {
    throw UsageError("--evrepsl requires --camera-model");
  }
  if (a.evrepsl && (a.f0.empty() || a.f1.empty())) {
    throw UsageError("--evrepsl requires --f0 and --f1 frames");
  }
  if (a.t0.has_value() != a.t1.has_value()) {
    throw UsageError("--t0 and --t1 go together");
  }
  EventStream stream = load_any_events(a.input, flag_dims(a.width, a.height), parse_zero(a.zero));
  if (a.t0) {
    stream = slice_by_time(stream, *a.t0, *a.t1);
  }
  const TemporalMode mode = parse_temporal(a.temporal);

  if (a.evrep) {
    write_file(a.output, write_tensor(to_tensor(compute_evrep_streaming(stream, mode))));
  } else if (a.evrepsl) {
    const CameraModel model = parse_camera_model(read_file(a.camera));
    const TrainingPair pair(
      load_frame(a.f0, stream.t_start()), load_frame(a.f1, stream.t_end()), stream);
    const EvRep rep = compute_evrep_streaming(stream, mode);
    const EvRepSL sl = assemble_evrepsl(rep, refine_integral(pair, model), model.theta());
    write_file(a.output, write_tensor(to_tensor(sl)));
  } else if (a.text) {
    write_text(a.output, write_text_events(stream));
  } else {
    write_file(a.output, write_binary_events(stream));
  }
  out << summary(stream) << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- simulate
struct SimulateArgs
{
  std::string frames;
  std::string camera;
  std::optional<double> theta;
  std::optional<double> k;
  std::string timing{"uniform"};
  NoiseConfig noise;
  bool text{false};
  std::string output;
};

int cmd_simulate(const SimulateArgs & a, std::ostream & out)
{
  if (a.camera.empty() == !(a.theta && a.k)) {
    throw UsageError("give either --camera-model or both --theta and --k");
  }
  const std::vector<Frame> frames = load_frames(read_frame_manifest(a.frames));
  if (frames.empty()) {
    throw InvalidArgument("frame manifest " + a.frames + " lists no frames");
  }
  const CameraModel model = a.camera.empty()
                              ? CameraModel::uniform(frames.front().dims(), *a.theta, *a.k)
                              : parse_camera_model(read_file(a.camera));
  TimingModel timing;
  timing.mode = a.timing == "leading-edge" ? TimingMode::leading_edge : TimingMode::uniform;
  if (!a.noise.is_identity()) {
    a.noise.validate();
    timing.noise = a.noise;
  }
  const EventStream stream = simulate_sequence(frames, model, timing);
  if (a.text) {
    write_text(a.output, write_text_events(stream));
  } else {
    write_file(a.output, write_binary_events(stream));
  }
  out << summary(stream) << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- estimate
struct EstimateArgs
{
  std::string pairs;
  std::string frames;
  std::string events;
  KSearchConfig search;
  std::string output;
  std::string report;
};

// "f0.pgm t0 f1.pgm t1 events" per line; paths relative to the manifest.
std::vector<TrainingPair> read_pairs_manifest(const fs::path & path)
{
  const Bytes data = read_file(path);
  const std::string text(data.begin(), data.end());
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string & p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };

  std::vector<TrainingPair> pairs;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string s; fields >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    if (tok.size() != 5) {
      throw ParseError(line_no, "expected \"f0 t0 f1 t1 events\", got " + std::to_string(tok.size()) + " fields");
    }
    std::uint64_t t0 = 0;
    std::uint64_t t1 = 0;
    for (auto [s, v] : {std::pair{&tok[1], &t0}, std::pair{&tok[3], &t1}}) {
      const auto r = std::from_chars(s->data(), s->data() + s->size(), *v);
      if (r.ec != std::errc() || r.ptr != s->data() + s->size()) {
        throw ParseError(line_no, "bad timestamp '" + *s + "'");
      }
    }
    Frame f0 = load_frame(resolve(tok[0]), t0);
    Frame f1 = load_frame(resolve(tok[2]), t1);
    const EventStream stream = load_events(resolve(tok[4]), f0.dims());
    if (stream.dims() != f0.dims()) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": event stream dimensions differ from the frames");
    }
    pairs.emplace_back(std::move(f0), std::move(f1), slice_by_time(stream, t0, t1));
  }
  return pairs;
}

int cmd_estimate(const EstimateArgs & a, std::ostream & out, std::ostream & err)
{
  const bool by_pairs = !a.pairs.empty();
  const bool by_frames = !a.frames.empty() || !a.events.empty();
  if (by_pairs == by_frames || (by_frames && (a.frames.empty() || a.events.empty()))) {
    throw UsageError("give either --pairs, or --frames together with --events");
  }
  std::vector<TrainingPair> pairs;
  if (by_pairs) {
    pairs = read_pairs_manifest(a.pairs);
  } else {
    const std::vector<Frame> frames = load_frames(read_frame_manifest(a.frames));
    if (frames.size() < 2) {
      throw InvalidArgument("frame manifest " + a.frames + " needs at least 2 frames");
    }
    pairs = make_training_pairs(frames, load_events(a.events, frames.front().dims()));
  }
  if (pairs.empty()) {
    throw InvalidArgument("no training pairs in " + (by_pairs ? a.pairs : a.frames));
  }
  const FitResult fit = fit_camera(pairs, a.search);
  for (const std::string & w : fit.warnings) {
    err << "warning: " << w << "\n";
  }
  write_file(a.output, write_camera_model(fit.model));
  const std::string report = format_fit_report(fit);
  if (!a.report.empty()) {
    write_text(a.report, report);
  }
  out << report;
  return kExitOk;
}

// ------------------------------------------------------------ reconstruct
struct ReconstructArgs
{
  std::string f0;
  std::string events;
  std::string camera;
  std::string output;
  bool prev{false};
};

int cmd_reconstruct(const ReconstructArgs & a, std::ostream & out)
{
  const Frame loaded = load_frame(a.f0, 0);
  const EventStream stream = load_events(a.events, loaded.dims());
  const Frame frame = loaded.with_time(a.prev ? stream.t_end() : stream.t_start());
  const CameraModel model = parse_camera_model(read_file(a.camera));
  const ChannelField integral = compute_e_i(stream);
  const Reconstruction r =
    a.prev ? reconstruct_prev(frame, integral, model) : reconstruct_next(frame, integral, model);
  write_file(a.output, write_frame_pgm(r.frame));
  out << "clamped_pixels=" << r.clamped_pixels << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- render
struct RenderArgs
{
  std::string tensor;
  std::size_t channel{0};
  std::string output;
};

int cmd_render(const RenderArgs & a, std::ostream & out)
{
  const Tensor t = parse_tensor(read_file(a.tensor));
  if (a.channel >= t.channels.size()) {
    throw InvalidArgument(
      "channel " + std::to_string(a.channel) + " out of range: tensor has " +
      std::to_string(t.channels.size()) + " channels");
  }
  const std::vector<double> v(t.channels[a.channel].begin(), t.channels[a.channel].end());
  std::vector<std::uint8_t> bytes(v.size(), 128);
  double lo = 0.0;
  double hi = 0.0;
  if (!v.empty()) {
    const simd::KernelTable & k = simd::kernels();
    k.min_max(v.data(), v.size(), &lo, &hi);
    if (hi > lo) {
      k.normalize_u8(v.data(), v.size(), lo, 255.0 / (hi - lo), bytes.data());
    }
  }
  GrayImage img;
  img.dims = t.dims;
  img.maxval = 255;
  img.pixels.assign(bytes.begin(), bytes.end());
  write_file(a.output, write_pgm(img));
  out << "channel=" << a.channel << " min=" << num(lo) << " max=" << num(hi) << " dims="
      << t.dims.width << "x" << t.dims.height << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ bench
struct BenchArgs
{
  std::string events;
  std::size_t synthetic{0};
  int width{0};
  int height{0};
  std::string path{"streaming"};
  std::size_t repeat{5};
  std::string temporal{"literal"};
  std::uint64_t seed{1};
};

int cmd_bench(const BenchArgs & a, std::ostream & out)
{
  if (a.events.empty() == (a.synthetic == 0)) {
    throw UsageError("give either an events file or --synthetic N");
  }
  const std::optional<Dims> dims = flag_dims(a.width, a.height);
  const EventStream stream = a.events.empty()
                               ? synthetic_stream(dims.value_or(Dims{346, 260}), a.synthetic, a.seed)
                               : load_any_events(a.events, dims, ZeroPolarity::negative);
  const BenchReport r =
    run_bench(stream, parse_evrep_path(a.path), a.repeat, parse_temporal(a.temporal));
  out << format_bench_report(r);
  return kExitOk;
}

void add_dims(CLI::App * app, int & width, int & height)
{
  app->add_option("--width", width, "Sensor width (text event input)")->check(CLI::Range(1, 65535));
  app->add_option("--height", height, "Sensor height (text event input)")->check(CLI::Range(1, 65535));
}
}  // namespace

int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Event camera representation toolkit", "evkit"};
  app.require_subcommand(1);

  ConvertArgs conv;
  auto * c = app.add_subcommand("convert", "Convert events to EVT1, text or an EVRP tensor");
  c->add_option("input", conv.input, "Text or EVT1 events")->required();
  c->add_option("-o,--output", conv.output, "Output file")->required();
  add_dims(c, conv.width, conv.height);
  c->add_flag("--text", conv.text, "Write text events");
  c->add_flag("--evrep", conv.evrep, "Write a 3-channel EvRep tensor");
  c->add_flag("--evrepsl", conv.evrepsl, "Write a 5-channel EvRepSL tensor");
  c->add_option("--camera-model", conv.camera, "ECAM file (for --evrepsl)");
  c->add_option("--f0", conv.f0, "Frame at the window start (for --evrepsl)");
  c->add_option("--f1", conv.f1, "Frame at the window end (for --evrepsl)");
  c->add_option("--t0", conv.t0, "Keep events with t0 <= t < t1");
  c->add_option("--t1", conv.t1, "End of the kept window");
  c->add_option("--zero-polarity", conv.zero, "Text polarity 0 means")
    ->check(CLI::IsMember({"negative", "reject"}));
  c->add_option("--temporal", conv.temporal, "E_T interval mean")
    ->check(CLI::IsMember({"literal", "conventional"}));

  SimulateArgs sim;
  auto * s = app.add_subcommand("simulate", "Generate events from a frame sequence");
  s->add_option("--frames", sim.frames, "Frame manifest (\"file t_us\" per line)")->required();
  s->add_option("--camera-model", sim.camera, "ECAM file");
  s->add_option("--theta", sim.theta, "Uniform contrast threshold")->check(CLI::PositiveNumber);
  s->add_option("--k", sim.k, "Intensity offset k")->check(CLI::NonNegativeNumber);
  s->add_option("--timing", sim.timing, "Event timestamps within an interval")
    ->check(CLI::IsMember({"uniform", "leading-edge"}));
  s->add_option("--ba-rate", sim.noise.ba_rate, "Background activity, events/pixel/s");
  s->add_option("--hole-prob", sim.noise.hole_prob, "Probability of dropping an event");
  s->add_option("--jitter", sim.noise.jitter_std, "Timestamp jitter std, microseconds");
  s->add_option("--dispersion", sim.noise.count_dispersion, "Per-pixel count perturbation probability");
  s->add_option("--seed", sim.noise.seed, "Noise seed");
  s->add_flag("--text", sim.text, "Write text events instead of EVT1");
  s->add_option("-o,--output", sim.output, "Output events")->required();

  EstimateArgs est;
  auto * e = app.add_subcommand("estimate", "Fit thresholds and k from frames and events");
  e->add_option("--pairs", est.pairs, "Manifest of \"f0 t0 f1 t1 events\" lines");
  e->add_option("--frames", est.frames, "Frame manifest (with --events)");
  e->add_option("--events", est.events, "Events covering the frame sequence");
  e->add_option("--k-min", est.search.k_min, "Lower end of the k search")->check(CLI::NonNegativeNumber);
  e->add_option("--k-max", est.search.k_max, "Upper end of the k search")->check(CLI::PositiveNumber);
  e->add_option("--tol", est.search.tolerance, "Final bracket width")->check(CLI::PositiveNumber);
  e->add_option("--grid", est.search.grid_points, "Coarse grid points")->check(CLI::Range(2, 100000));
  e->add_option("-o,--output", est.output, "Output ECAM camera model")->required();
  e->add_option("--report", est.report, "Also write the fit report here");

  ReconstructArgs rec;
  auto * r = app.add_subcommand("reconstruct", "Predict the next frame from a frame and events");
  r->add_option("--f0", rec.f0, "Starting frame (PGM)")->required();
  r->add_option("--events", rec.events, "Events of the interval")->required();
  r->add_option("--camera-model", rec.camera, "ECAM file")->required();
  r->add_option("-o,--output", rec.output, "Output PGM")->required();
  r->add_flag("--prev", rec.prev, "Treat --f0 as the end frame and predict the start frame");

  RenderArgs ren;
  auto * v = app.add_subcommand("render", "Render one tensor channel as an 8-bit PGM");
  v->add_option("tensor", ren.tensor, "EVRP file")->required();
  v->add_option("--channel", ren.channel, "Channel index");
  v->add_option("-o,--output", ren.output, "Output PGM")->required();

  BenchArgs ben;
  auto * b = app.add_subcommand("bench", "Time EvRep computation (I/O excluded)");
  b->add_option("events", ben.events, "Events file");
  b->add_option("--synthetic", ben.synthetic, "Use N random events instead of a file");
  add_dims(b, ben.width, ben.height);
  b->add_option("--path", ben.path, "Implementation")->check(CLI::IsMember({"reference", "streaming"}));
  b->add_option("--repeat", ben.repeat, "Runs; the median is reported")->check(CLI::Range(1, 1000000));
  b->add_option("--temporal", ben.temporal, "E_T interval mean")
    ->check(CLI::IsMember({"literal", "conventional"}));
  b->add_option("--seed", ben.seed, "Synthetic stream seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & ex) {
    return app.exit(ex, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_convert(conv, out);
    if (s->parsed()) return cmd_simulate(sim, out);
    if (e->parsed()) return cmd_estimate(est, out, err);
    if (r->parsed()) return cmd_reconstruct(rec, out);
    if (v->parsed()) return cmd_render(ren, out);
    if (b->parsed()) return cmd_bench(ben, out);
  } catch (const UsageError & ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception & ex) {
    err << "error: " << ex.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace evkit::cli
