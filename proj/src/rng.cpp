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

#include "birvae/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace birvae {

std::uint64_t Rng::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::next_below: n must be > 0");
  if (n == 1) return 0;
  // Smallest all-ones mask covering n-1, then rejection sample.
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t v = next_u64() & mask;
    if (v < n) return v;
  }
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal(double mean, double sigma) {
  if (sigma < 0.0) {
    throw std::invalid_argument("Rng::normal: sigma must be >= 0, got " +
                                std::to_string(sigma));
  }
  if (sigma == 0.0) return mean;
  if (has_spare_) {
    has_spare_ = false;
    return mean + sigma * spare_;
  }
  // Marsaglia polar method; uses only sqrt/log so the stream is stable.
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double r = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * r;
  has_spare_ = true;
  return mean + sigma * (u * r);
}

Tensor Rng::normal_tensor(std::vector<std::size_t> shape, double mean,
                          double sigma) {
  Tensor t(std::move(shape));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = normal(mean, sigma);
  return t;
}

std::uint64_t Rng::derive_seed(std::uint64_t base, std::uint64_t salt) {
  // splitmix64 finalizer over base + golden-ratio-stepped salt.
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace birvae
