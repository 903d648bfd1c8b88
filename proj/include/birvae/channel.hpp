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

#ifndef BIRVAE_CHANNEL_HPP_
#define BIRVAE_CHANNEL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "birvae/autodiff.hpp"
#include "birvae/rng.hpp"
#include "birvae/tensor.hpp"

namespace birvae {

// I = (d/2) log2(1/sigma_eps2), bits per image.
double sigma2_to_rate(double sigma_eps2, std::size_t d);

// Inverse: sigma_eps2 = 4^(-rate/d). Round-trips with sigma2_to_rate.
double rate_to_sigma2(double rate_bpi, std::size_t d);

/// The fixed-SNR latent channel: z = y + eps with eps ~ N(0, sigma_eps2 I).
/// rate_bpi and sigma_eps2 are kept mutually consistent by construction;
/// sigma_eps2 = 1 expresses the 0 bpi boundary case.
struct ChannelSpec {
  std::size_t d = 0;
  double sigma_eps2 = 1.0;
  double rate_bpi = 0.0;

  static ChannelSpec from_rate(double rate_bpi, std::size_t d);
  static ChannelSpec from_sigma2(double sigma_eps2, std::size_t d);

  double sigma_eps() const;
};

// z = y + eps. Differentiable pass-through: the noise enters the graph as
// a constant (reparameterization). sigma_eps2 == 0 is tolerated here so
// tests can probe the zero-noise limit.
Tensor apply_noise_channel(const Tensor& y, const ChannelSpec& spec, Rng& rng);
Var apply_noise_channel(const Var& y, const ChannelSpec& spec, Rng& rng);

/// Scaled-lattice scalar quantizer that substitutes for the noise channel
/// at deployment. step = sigma_eps * sqrt(12) so the quantization noise
/// power Delta^2/12 matches sigma_eps2.
struct QuantizerSpec {
  double step = 1.0;
  bool dither = true;
  std::uint64_t seed = 0;
};

QuantizerSpec make_quantizer(const ChannelSpec& spec, bool dither,
                             std::uint64_t seed);

// Per-dimension subtractive dither offsets in [-step/2, step/2), derived
// from q.seed. All zeros when dither is off.
std::vector<double> dither_offsets(const QuantizerSpec& q, std::size_t count);

// index_i = round((y_i + u_i)/step); reconstruction_i = index_i*step - u_i.
std::vector<std::int64_t> quantize(std::span<const double> y,
                                   const QuantizerSpec& q);
std::vector<double> dequantize(std::span<const std::int64_t> indices,
                               const QuantizerSpec& q);

}  // namespace birvae

#endif  // BIRVAE_CHANNEL_HPP_
