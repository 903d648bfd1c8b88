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

#ifndef BIRVAE_BINARY_IO_HPP_
#define BIRVAE_BINARY_IO_HPP_

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "birvae/common.hpp"

namespace birvae {

// Byte-exact little-endian serialization helpers shared by the checkpoint
// and bitstream containers. IDX files use the big-endian variants.

class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16le(std::uint16_t v);
  void u32le(std::uint32_t v);
  void u64le(std::uint64_t v);
  void f64le(double v);
  void u32be(std::uint32_t v);
  void bytes(const std::uint8_t* p, std::size_t n);

  const std::vector<std::uint8_t>& data() const { return buf_; }
  void write_file(const std::string& path) const;

 private:
  std::vector<std::uint8_t> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::vector<std::uint8_t> buf, std::string origin)
      : buf_(std::move(buf)), origin_(std::move(origin)) {}

  static ByteReader from_file(const std::string& path);

  std::uint8_t u8();
  std::uint16_t u16le();
  std::uint32_t u32le();
  std::uint64_t u64le();
  double f64le();
  std::uint32_t u32be();
  std::vector<std::uint8_t> bytes(std::size_t n);

  std::size_t remaining() const { return buf_.size() - pos_; }
  void expect_exhausted() const;

 private:
  void need(std::size_t n) const;

  std::vector<std::uint8_t> buf_;
  std::string origin_;
  std::size_t pos_ = 0;
};

}  // namespace birvae

#endif  // BIRVAE_BINARY_IO_HPP_
