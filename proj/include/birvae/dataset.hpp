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

#ifndef BIRVAE_DATASET_HPP_
#define BIRVAE_DATASET_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "birvae/tensor.hpp"

namespace birvae {

/// Immutable training/eval data: N flattened items with values in [0, 1],
/// optional integer labels, and the raster geometry of one item.
struct Dataset {
  Tensor items;  // [N x n]
  std::vector<int> labels;
  std::size_t image_rows = 0;
  std::size_t image_cols = 0;
  std::string name;

  std::size_t size() const { return items.rows(); }
  std::size_t dim() const { return items.cols(); }
  bool has_labels() const { return !labels.empty(); }
};

// IDX readers (big-endian header, u8 payload). Pixels are scaled by 1/255
// into [0, 1]. Wrong magic or a byte length that disagrees with the
// declared counts raises FormatError.
Dataset load_idx_images(const std::string& path);
std::vector<int> load_idx_labels(const std::string& path);

// IDX writers; pixel doubles are clamped to [0, 1] and quantized with
// round(v * 255).
void save_idx_images(const Dataset& ds, const std::string& path);
void save_idx_labels(const std::vector<int>& labels, const std::string& path);

// First n items in original order, labels sliced consistently.
Dataset take_prefix(const Dataset& ds, std::size_t n);

// k equal-weight spherical Gaussians, means seeded uniform in [0.2, 0.8]^n,
// sigma = 0.05, samples clipped to [0, 1]. Component index is the label.
// Fast substitute data for property tests.
Dataset synthetic_gmm(std::size_t n_dims, std::size_t k_components,
                      std::size_t n_samples, std::uint64_t seed);

}  // namespace birvae

#endif  // BIRVAE_DATASET_HPP_
