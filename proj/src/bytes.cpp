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

#include "evkit/bytes.hpp"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <fstream>
#include <iterator>
#include <string>

#include "evkit/error.hpp"

namespace evkit
{
std::uint32_t crc32(std::span<const std::uint8_t> data)
{
  // zlib takes uInt lengths; feed in chunks so >4 GiB buffers stay correct
  uLong crc = ::crc32(0L, Z_NULL, 0);
  std::size_t off = 0;
  constexpr std::size_t chunk = 1u << 30;
  while (off < data.size()) {
    const std::size_t n = std::min(chunk, data.size() - off);
    crc = ::crc32(crc, data.data() + off, static_cast<uInt>(n));
    off += n;
  }
  return static_cast<std::uint32_t>(crc);
}

void ByteWriter::magic(const std::array<std::uint8_t, 4> & m)
{
  buf_.insert(buf_.end(), m.begin(), m.end());
}

void ByteWriter::u16(std::uint16_t v)
{
  buf_.push_back(static_cast<std::uint8_t>(v));
  buf_.push_back(static_cast<std::uint8_t>(v >> 8));
}

void ByteWriter::u32(std::uint32_t v)
{
  for (int i = 0; i < 4; ++i) {
    buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

void ByteWriter::u64(std::uint64_t v)
{
  for (int i = 0; i < 8; ++i) {
    buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

void ByteWriter::f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
void ByteWriter::f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

Bytes ByteWriter::finish_with_crc() &&
{
  const std::uint32_t c = crc32(buf_);
  u32(c);
  return std::move(buf_);
}

void ByteReader::need(std::size_t n)
{
  if (remaining() < n) {
    throw FormatError(
      "truncated payload: need " + std::to_string(n) + " bytes at offset " + std::to_string(pos_) +
      ", " + std::to_string(remaining()) + " left");
  }
}

void ByteReader::expect_magic(const std::array<std::uint8_t, 4> & m, std::string_view name)
{
  if (remaining() < 4 || !std::equal(m.begin(), m.end(), data_.begin() + pos_)) {
    throw FormatError("bad magic: not a " + std::string(name) + " file");
  }
  pos_ += 4;
}

std::uint8_t ByteReader::u8()
{
  need(1);
  return data_[pos_++];
}

std::uint16_t ByteReader::u16()
{
  need(2);
  const auto v = static_cast<std::uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
  pos_ += 2;
  return v;
}

std::uint32_t ByteReader::u32()
{
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
  }
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::u64()
{
  need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
  }
  pos_ += 8;
  return v;
}

float ByteReader::f32() { return std::bit_cast<float>(u32()); }
double ByteReader::f64() { return std::bit_cast<double>(u64()); }

void ByteReader::require_remaining(std::size_t n, std::string_view what) const
{
  if (remaining() < n) {
    throw FormatError(
      "truncated payload: " + std::string(what) + " needs " + std::to_string(n) + " bytes, " +
      std::to_string(remaining()) + " left");
  }
  if (remaining() > n) {
    throw FormatError(
      "trailing data: " + std::to_string(remaining() - n) + " unexpected bytes after " +
      std::string(what));
  }
}

std::span<const std::uint8_t> strip_verified_crc(std::span<const std::uint8_t> data)
{
  if (data.size() < 4) {
    throw FormatError("truncated payload: no room for checksum");
  }
  const auto payload = data.first(data.size() - 4);
  ByteReader tail(data.last(4));
  if (tail.u32() != crc32(payload)) {
    throw FormatError("checksum mismatch");
  }
  return payload;
}

Bytes read_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error("read failed: " + path.string());
  }
  return data;
}

void write_file(const std::filesystem::path & path, std::span<const std::uint8_t> data)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot create " + path.string());
  }
  out.write(reinterpret_cast<const char *>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw Error("write failed: " + path.string());
  }
}

}  // namespace evkit
