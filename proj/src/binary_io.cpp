// Copyright (c) the BIR-VAE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "birvae/binary_io.hpp"

#include <fstream>

namespace birvae {

void ByteWriter::u16le(std::uint16_t v) {
  u8(static_cast<std::uint8_t>(v & 0xFF));
  u8(static_cast<std::uint8_t>(v >> 8));
}

void ByteWriter::u32le(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

void ByteWriter::u64le(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

void ByteWriter::f64le(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  u64le(bits);
}

void ByteWriter::u32be(std::uint32_t v) {
  for (int i = 3; i >= 0; --i) u8(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

void ByteWriter::bytes(const std::uint8_t* p, std::size_t n) {
  buf_.insert(buf_.end(), p, p + n);
}

void ByteWriter::write_file(const std::string& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw FormatError("cannot open for writing: " + path);
  os.write(reinterpret_cast<const char*>(buf_.data()),
           static_cast<std::streamsize>(buf_.size()));
  if (!os) throw FormatError("short write: " + path);
}

ByteReader ByteReader::from_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open: " + path);
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(is)),
                                std::istreambuf_iterator<char>());
  return ByteReader(std::move(buf), path);
}

void ByteReader::need(std::size_t n) const {
  if (pos_ + n > buf_.size()) {
    throw FormatError(origin_ + ": truncated (need " + std::to_string(n) +
                      " bytes at offset " + std::to_string(pos_) + ", have " +
                      std::to_string(buf_.size() - pos_) + ")");
  }
}

std::uint8_t ByteReader::u8() {
  need(1);
  return buf_[pos_++];
}

std::uint16_t ByteReader::u16le() {
  need(2);
  std::uint16_t v = static_cast<std::uint16_t>(buf_[pos_] | (buf_[pos_ + 1] << 8));
  pos_ += 2;
  return v;
}

std::uint32_t ByteReader::u32le() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | buf_[pos_ + static_cast<std::size_t>(i)];
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::u64le() {
  need(8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | buf_[pos_ + static_cast<std::size_t>(i)];
  pos_ += 8;
  return v;
}

double ByteReader::f64le() {
  std::uint64_t bits = u64le();
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

std::uint32_t ByteReader::u32be() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | buf_[pos_ + static_cast<std::size_t>(i)];
  pos_ += 4;
  return v;
}

std::vector<std::uint8_t> ByteReader::bytes(std::size_t n) {
  need(n);
  std::vector<std::uint8_t> out(buf_.begin() + static_cast<std::ptrdiff_t>(pos_),
                                buf_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
  pos_ += n;
  return out;
}

void ByteReader::expect_exhausted() const {
  if (pos_ != buf_.size()) {
    throw FormatError(origin_ + ": " + std::to_string(buf_.size() - pos_) +
                      " trailing bytes");
  }
}

}  // namespace birvae
