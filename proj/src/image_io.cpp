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

#include "evkit/image_io.hpp"

#include <charconv>
#include <string>

#include "evkit/error.hpp"
#include "evkit/simd/kernels.hpp"

namespace evkit
{
namespace
{
bool pgm_space(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Reads one unsigned decimal header field, skipping whitespace and comments.
std::uint64_t header_field(std::span<const std::uint8_t> data, std::size_t & pos, const char * name)
{
  for (;;) {
    while (pos < data.size() && pgm_space(data[pos])) ++pos;
    if (pos < data.size() && data[pos] == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
      continue;
    }
    break;
  }
  const auto * first = reinterpret_cast<const char *>(data.data()) + pos;
  const auto * last = reinterpret_cast<const char *>(data.data()) + data.size();
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr == first) {
    throw FormatError(std::string("PGM: bad ") + name);
  }
  pos += static_cast<std::size_t>(ptr - first);
  return v;
}
}  // namespace

GrayImage parse_pgm(std::span<const std::uint8_t> data)
{
  if (data.size() < 2 || data[0] != 'P' || data[1] != '5') {
    throw FormatError("bad magic: not a binary PGM (P5) file");
  }
  std::size_t pos = 2;
  const std::uint64_t w = header_field(data, pos, "width");
  const std::uint64_t h = header_field(data, pos, "height");
  const std::uint64_t maxval = header_field(data, pos, "maxval");
  if (w == 0 || h == 0 || w > 65535 || h > 65535) {
    throw FormatError("PGM: unsupported dimensions " + std::to_string(w) + "x" + std::to_string(h));
  }
  if (maxval == 0 || maxval > 65535) {
    throw FormatError("PGM: maxval " + std::to_string(maxval) + " out of range");
  }
  if (pos >= data.size() || !pgm_space(data[pos])) {
    throw FormatError("PGM: missing whitespace after header");
  }
  ++pos;

  GrayImage img;
  img.dims = Dims{static_cast<std::uint16_t>(w), static_cast<std::uint16_t>(h)};
  img.maxval = static_cast<std::uint16_t>(maxval);
  const std::size_t n = img.dims.pixels();
  const std::size_t bps = maxval > 255 ? 2 : 1;
  if (data.size() - pos < n * bps) {
    throw FormatError("PGM: truncated raster");
  }
  img.pixels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint16_t v = data[pos + i * bps];
    if (bps == 2) {
      v = static_cast<std::uint16_t>((v << 8) | data[pos + i * 2 + 1]);
    }
    if (v > maxval) {
      throw FormatError("PGM: sample exceeds maxval");
    }
    img.pixels[i] = v;
  }
  return img;
}

Bytes write_pgm(const GrayImage & image)
{
  if (image.pixels.size() != image.dims.pixels() || image.maxval == 0) {
    throw InvalidArgument("write_pgm: inconsistent image");
  }
  const std::string header = "P5\n" + std::to_string(image.dims.width) + " " +
                             std::to_string(image.dims.height) + "\n" +
                             std::to_string(image.maxval) + "\n";
  Bytes out(header.begin(), header.end());
  const bool wide = image.maxval > 255;
  out.reserve(out.size() + image.pixels.size() * (wide ? 2 : 1));
  for (const std::uint16_t v : image.pixels) {
    if (wide) {
      out.push_back(static_cast<std::uint8_t>(v >> 8));
    }
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

Frame frame_from_pgm(std::span<const std::uint8_t> data, std::uint64_t t)
{
  const GrayImage img = parse_pgm(data);
  std::vector<double> values(img.pixels.size());
  const double scale = static_cast<double>(img.maxval);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = img.pixels[i] / scale;
  }
  return Frame(img.dims, t, std::move(values));
}

GrayImage quantize_frame(const Frame & frame)
{
  std::vector<std::uint8_t> q(frame.dims().pixels());
  simd::kernels().quantize_unit_u8(frame.values().data(), q.size(), q.data());
  GrayImage img;
  img.dims = frame.dims();
  img.maxval = 255;
  img.pixels.assign(q.begin(), q.end());
  return img;
}

Bytes write_frame_pgm(const Frame & frame) { return write_pgm(quantize_frame(frame)); }

Frame load_frame(const std::filesystem::path & path, std::uint64_t t)
{
  try {
    return frame_from_pgm(read_file(path), t);
  } catch (const FormatError & e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_frame(const std::filesystem::path & path, const Frame & frame)
{
  write_file(path, write_frame_pgm(frame));
}

std::vector<ManifestEntry> parse_frame_manifest(
  std::string_view text, const std::filesystem::path & base_dir)
{
  std::vector<ManifestEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && pgm_space(static_cast<std::uint8_t>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && pgm_space(static_cast<std::uint8_t>(line.front()))) line.remove_prefix(1);
    if (line.empty()) continue;

    const auto split = line.find_last_of(" \t");
    if (split == std::string_view::npos) {
      throw ParseError(line_no, "expected \"filename t_microseconds\"");
    }
    std::string_view name = line.substr(0, split);
    while (!name.empty() && pgm_space(static_cast<std::uint8_t>(name.back()))) name.remove_suffix(1);
    const std::string_view ts = line.substr(split + 1);
    std::uint64_t t = 0;
    const auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), t);
    if (ec != std::errc() || ptr != ts.data() + ts.size()) {
      throw ParseError(line_no, "bad timestamp '" + std::string(ts) + "'");
    }
    std::filesystem::path file{std::string(name)};
    if (file.is_relative()) file = base_dir / file;
    out.push_back(ManifestEntry{file, t});
  }
  return out;
}

std::vector<ManifestEntry> read_frame_manifest(const std::filesystem::path & path)
{
  const Bytes data = read_file(path);
  return parse_frame_manifest(
    std::string_view(reinterpret_cast<const char *>(data.data()), data.size()),
    path.parent_path());
}

std::vector<Frame> load_frames(const std::vector<ManifestEntry> & entries)
{
  std::vector<Frame> frames;
  frames.reserve(entries.size());
  for (const ManifestEntry & e : entries) {
    frames.push_back(load_frame(e.file, e.t));
  }
  return frames;
}

}  // namespace evkit
