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

#ifndef BIRVAE_MODEL_HPP_
#define BIRVAE_MODEL_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "birvae/adam.hpp"
#include "birvae/autodiff.hpp"
#include "birvae/channel.hpp"
#include "birvae/dataset.hpp"
#include "birvae/mmd.hpp"
#include "birvae/rng.hpp"

namespace birvae {

enum class Variant : std::uint8_t {
  kBirVae = 0,
  kMmdVaeBaseline = 1,  // learned per-dimension sigma, floored at 0.01
};

// Role doubles as the serialized activation id, so a checkpoint can be
// split back into encoder / sigma head / decoder without guessing from
// layer widths.
enum class LayerRole : std::uint8_t {
  kHidden = 0,       // relu
  kEncoderMean = 1,  // linear encoder output (y)
  kDecoderOut = 2,   // sigmoid decoder output (pixels live in [0, 1])
  kLogSigmaHead = 3, // linear log-sigma output (baseline only)
};

struct Layer {
  Var w;  // [in x out]
  Var b;  // [out]
  LayerRole role = LayerRole::kHidden;
};

/// Encoder -> channel -> decoder assembly.
struct Model {
  Variant variant = Variant::kBirVae;
  ChannelSpec channel;
  std::vector<Layer> encoder;  // hidden layers then the kEncoderMean head
  std::vector<Layer> decoder;  // hidden layers then the kDecoderOut layer
  Layer log_sigma;             // reads the last encoder hidden; baseline only

  std::size_t input_dim() const;
  std::size_t latent_dim() const { return channel.d; }

  // Deterministic order: encoder, log-sigma head (baseline), decoder.
  std::vector<Var> parameters() const;

  // Graph-free forward passes for evaluation paths.
  Tensor encode_mean_value(const Tensor& x) const;
  Tensor decode_value(const Tensor& z) const;
  // Baseline conditional sigma(x), exp(log sigma head) floored at
  // kSigmaFloor elementwise.
  Tensor sigma_value(const Tensor& x) const;

  static constexpr double kSigmaFloor = 0.01;
};

// Glorot-uniform weights, zero biases, drawn from rng in layer order.
Model make_model(Variant variant, std::size_t input_dim,
                 const std::vector<std::size_t>& hidden,
                 const ChannelSpec& channel, Rng& rng);

// Deterministic encoder output y = mu(x) for a batch.
Tensor encode_mean(const Model& model, const Tensor& x);

struct LossTerms {
  Var loss;  // graph root for backward()
  double total = 0.0;
  double mse_part = 0.0;
  double mmd_part = 0.0;
};

// L = MSE(xhat, x) + lambda * MMD^2[q(z) || N(0, I)] on one minibatch.
// Draw order from rng: channel noise first, then the MMD prior sample.
// For the baseline variant z = y + sigma(x) .* eps instead of y + eps.
// Any non-finite term aborts with a NumericError naming the tensor.
LossTerms training_loss(const Model& model, const Tensor& batch, double lambda,
                        Rng& rng, const KernelSpec& kernel = {});

// The baseline path of training_loss; requires the log-sigma head.
LossTerms baseline_loss(const Model& model, const Tensor& batch, double lambda,
                        Rng& rng, const KernelSpec& kernel = {});

struct TrainConfig {
  Variant variant = Variant::kBirVae;
  ChannelSpec channel;
  std::vector<std::size_t> hidden = {1024, 1024};
  double lambda = 1000.0;
  int epochs = 50;
  int batch = 200;  // >= 2: the MMD term needs at least two latent samples
  std::uint64_t seed = 0;
  AdamConfig adam;
};

struct EpochStats {
  double loss = 0.0;
  double mse = 0.0;
  double mmd = 0.0;
};

struct Checkpoint {
  Model model;
  double lambda = 1000.0;
  std::vector<EpochStats> history;
};

struct TrainResult {
  Checkpoint checkpoint;
  bool diverged = false;  // stopped early; checkpoint holds last finite state
};

// Algorithm-1 training loop: seeded init, per-epoch seeded shuffle, short
// final minibatch kept, one adam_step per minibatch. Deterministic for a
// fixed seed. on_epoch, when set, observes the epoch index and its
// sample-weighted mean stats.
TrainResult train(const Dataset& dataset, const TrainConfig& config,
                  const std::function<void(int, const EpochStats&)>& on_epoch = {});

enum class ReconstructMode { kStochastic, kNoiseless, kQuantized };

// decoder(y + eps) / decoder(y) / decoder(dequantize(quantize(y))). The
// quantized mode runs the dithered lattice quantizer with a dither seed
// drawn from rng; it requires sigma_eps2 > 0.
Tensor reconstruct(const Model& model, const Tensor& x, Rng& rng,
                   ReconstructMode mode);

// Decodes count samples of z ~ N(0, I_d); output clipped to [0, 1].
Tensor generate(const Model& model, std::size_t count, Rng& rng);

// Mean per-image reconstruction MSE over a dataset in the given mode,
// running the channel with a dedicated Rng(seed).
double dataset_mse(const Model& model, const Tensor& items,
                   ReconstructMode mode, std::uint64_t seed);

struct PosteriorCheck {
  double mmd2 = 0.0;
  double null_mean = 0.0;
  double threshold = 0.0;  // 3 x null_mean
  std::size_t sample_size = 0;
  bool ok = false;
};

// Compares held-out latents z against N(0, I): mmd2 of up to max_samples
// noisy latents vs a fresh prior sample, against a Monte-Carlo null of
// null_pairs independent N(0, I) sample pairs of matched size. Training
// prints a lambda-escalation warning when this fails.
PosteriorCheck aggregate_posterior_check(const Model& model,
                                         const Tensor& items,
                                         std::uint64_t seed,
                                         std::size_t max_samples = 1000,
                                         int null_pairs = 100);

// --- checkpoint container ---------------------------------------------------
//
// Little-endian layout: magic "BIRV", version u16 = 1, variant u8, d u16,
// sigma_eps2 f64, lambda f64, layer count u16, per layer (rows u32,
// cols u32, activation id u8, weights then biases f64 row-major), history
// (epoch count u32, per epoch f64 loss, mse, mmd).

void save_checkpoint(const Checkpoint& ckpt, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace birvae

#endif  // BIRVAE_MODEL_HPP_
