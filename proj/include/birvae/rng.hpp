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

#ifndef BIRVAE_RNG_HPP_
#define BIRVAE_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "birvae/tensor.hpp"

namespace birvae {

/// Deterministic random stream: identical seed gives an identical stream
/// on every run. The engine is std::mt19937_64 (fully specified by the
/// standard); all distribution transforms are implemented here instead of
/// relying on the implementation-defined std::*_distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased draw in [0, n). Masked rejection sampling.
  std::uint64_t next_below(std::uint64_t n);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // N(mean, sigma^2) via the Marsaglia polar method. sigma == 0 returns
  // mean exactly and consumes no draws; sigma < 0 is a domain error.
  double normal(double mean, double sigma);

  Tensor normal_tensor(std::vector<std::size_t> shape, double mean, double sigma);

  // In-place seeded Fisher-Yates permutation.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Derives an independent stream seed from this rng's seed and a salt,
  // without consuming draws. Used for per-image dither streams.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace birvae

#endif  // BIRVAE_RNG_HPP_
