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

#ifndef EVKIT_IMAGE_IO_HPP
#define EVKIT_IMAGE_IO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "evkit/bytes.hpp"
#include "evkit/frame.hpp"

namespace evkit
{
/// Raw 8- or 16-bit grayscale raster as stored in a binary PGM.
struct GrayImage
{
  Dims dims{};
  std::uint16_t maxval{255};
  std::vector<std::uint16_t> pixels;
};

/// Binary PGM (P5). Header comments are accepted; maxval up to 65535
/// (two big-endian bytes per sample above 255).
GrayImage parse_pgm(std::span<const std::uint8_t> data);
Bytes write_pgm(const GrayImage & image);

/// Decodes a PGM into a frame with values v / maxval.
Frame frame_from_pgm(std::span<const std::uint8_t> data, std::uint64_t t);
/// 8-bit quantization: round(v * 255).
GrayImage quantize_frame(const Frame & frame);
Bytes write_frame_pgm(const Frame & frame);

Frame load_frame(const std::filesystem::path & path, std::uint64_t t);
void save_frame(const std::filesystem::path & path, const Frame & frame);

struct ManifestEntry
{
  std::filesystem::path file;  // resolved against the manifest directory
  std::uint64_t t{0};
};

/// Frame manifest: one "filename t_microseconds" per line, '#' comments.
std::vector<ManifestEntry> parse_frame_manifest(
  std::string_view text, const std::filesystem::path & base_dir);
std::vector<ManifestEntry> read_frame_manifest(const std::filesystem::path & path);
std::vector<Frame> load_frames(const std::vector<ManifestEntry> & entries);

}  // namespace evkit
#endif  // EVKIT_IMAGE_IO_HPP
