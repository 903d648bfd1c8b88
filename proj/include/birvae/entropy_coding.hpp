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

#ifndef BIRVAE_ENTROPY_CODING_HPP_
#define BIRVAE_ENTROPY_CODING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "birvae/channel.hpp"

namespace birvae {

/// Carry-propagating 32-bit range coder, byte-aligned output. Cumulative
/// frequency totals must not exceed 1 << 16.
class RangeEncoder {
 public:
  void encode(std::uint32_t cum_lo, std::uint32_t cum_hi, std::uint32_t total);
  // Flushes the pending low bits and returns the payload.
  std::vector<std::uint8_t> finish();

 private:
  void shift_low();

  std::uint64_t low_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint8_t cache_ = 0;
  std::uint64_t cache_size_ = 1;
  std::vector<std::uint8_t> out_;
};

class RangeDecoder {
 public:
  explicit RangeDecoder(std::span<const std::uint8_t> payload);

  // Returns a value in [0, total); the caller maps it to a symbol and
  // confirms with decode_update using that symbol's cumulative bounds.
  std::uint32_t decode_target(std::uint32_t total);
  void decode_update(std::uint32_t cum_lo, std::uint32_t cum_hi,
                     std::uint32_t total);

 private:
  std::uint8_t next_byte();

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
  std::size_t overrun_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint32_t code_ = 0;
};

/// Fixed entropy model: a discretized standard normal over lattice cells,
///   P(i) = Phi((i + 1/2) step) - Phi((i - 1/2) step),
/// quantized to integer frequencies with total 1 << 16. Indices beyond the
/// modeled range +-K are sent through an escape symbol followed by 64 raw
/// bits. Both sides rebuild the identical table from the header's step, so
/// no model state travels in the stream.
class GaussianSymbolModel {
 public:
  explicit GaussianSymbolModel(double step);

  int max_index() const { return max_index_; }
  std::uint32_t total() const { return kTotal; }

  // Cumulative bounds of the symbol for lattice index i (escape excluded;
  // |i| must be <= max_index()).
  void index_bounds(std::int64_t i, std::uint32_t* lo, std::uint32_t* hi) const;
  void escape_bounds(std::uint32_t* lo, std::uint32_t* hi) const;

  // Maps a decode_target value back to a symbol: lattice index, or escape
  // (flagged via is_escape).
  std::int64_t symbol_from_target(std::uint32_t target, bool* is_escape) const;

  // Exact model cost of one index in bits: -log2(freq/total), plus 64 for
  // escape-coded indices.
  double bit_cost(std::int64_t i) const;

  static constexpr std::uint32_t kTotal = 1u << 16;

 private:
  int max_index_ = 0;
  std::vector<std::uint32_t> cum_;  // size 2K+3: bounds for 2K+1 indices + escape
};

/// Entropy-coded quantized latents of one image. bit_length is the exact
/// model code length in bits (ceil of the summed symbol costs) — the cost
/// of these symbols inside a long stream. The payload is standalone
/// decodable and additionally carries the coder's constant termination
/// overhead, which byte-aligned per-image framing cannot avoid.
struct LatentBitstream {
  std::uint16_t d = 0;
  double step = 0.0;
  std::uint32_t count = 0;  // number of coded indices (== d)
  bool dither = true;
  std::uint64_t dither_seed = 0;
  std::vector<std::uint8_t> payload;
  std::uint64_t bit_length = 0;
};

LatentBitstream entropy_encode(std::span<const std::int64_t> indices,
                               const QuantizerSpec& q);

// Inverts entropy_encode exactly. Truncated payloads raise FormatError;
// arbitrary bit corruption inside a well-formed payload is undetectable by
// construction (no checksum in the frozen format).
std::vector<std::int64_t> entropy_decode(const LatentBitstream& bs);

// --- bitstream container ----------------------------------------------------
//
// File layout (little-endian):
//   magic "BIRB", version u16 = 1, d u16, step f64, dither u8,
//   dither seed u64, image count u32, then per image:
//   payload length u32, payload bytes.
// Image k's dither offsets come from Rng::derive_seed(dither_seed, k).

struct BitstreamFile {
  std::uint16_t d = 0;
  QuantizerSpec quant;
  std::vector<LatentBitstream> images;
};

void write_bitstream_file(const std::string& path, const BitstreamFile& file);
BitstreamFile read_bitstream_file(const std::string& path);

}  // namespace birvae

#endif  // BIRVAE_ENTROPY_CODING_HPP_
