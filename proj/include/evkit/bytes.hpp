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

#ifndef EVKIT_BYTES_HPP
#define EVKIT_BYTES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace evkit
{
using Bytes = std::vector<std::uint8_t>;

/// Standard CRC-32 (IEEE 802.3 polynomial, as used by zlib and PNG).
std::uint32_t crc32(std::span<const std::uint8_t> data);

/// Appends little-endian scalars.
class ByteWriter
{
public:
  void magic(const std::array<std::uint8_t, 4> & m);
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void i8(std::int8_t v) { buf_.push_back(static_cast<std::uint8_t>(v)); }
  void u16(std::uint16_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f32(float v);
  void f64(double v);
  void reserve(std::size_t n) { buf_.reserve(n); }

  /// Appends CRC-32 of everything written so far and returns the buffer.
  Bytes finish_with_crc() &&;

private:
  Bytes buf_;
};

/// Bounds-checked little-endian reader. Throws FormatError on truncation.
class ByteReader
{
public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  /// Checks the 4-byte magic; `name` appears in the error message.
  void expect_magic(const std::array<std::uint8_t, 4> & m, std::string_view name);
  std::uint8_t u8();
  std::int8_t i8() { return static_cast<std::int8_t>(u8()); }
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  float f32();
  double f64();

  /// Fails unless exactly `n` bytes remain.
  void require_remaining(std::size_t n, std::string_view what) const;

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }

private:
  void need(std::size_t n);

  std::span<const std::uint8_t> data_;
  std::size_t pos_{0};
};

/// Verifies the CRC-32 stored in the last 4 bytes against everything before
/// it and returns that checked prefix. Throws FormatError.
std::span<const std::uint8_t> strip_verified_crc(std::span<const std::uint8_t> data);

Bytes read_file(const std::filesystem::path & path);
void write_file(const std::filesystem::path & path, std::span<const std::uint8_t> data);

}  // namespace evkit
#endif  // EVKIT_BYTES_HPP
