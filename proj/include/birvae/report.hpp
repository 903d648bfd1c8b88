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

#ifndef BIRVAE_REPORT_HPP_
#define BIRVAE_REPORT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "birvae/tensor.hpp"

namespace birvae {

struct MseRow {
  std::string model_id;
  double rate_bpi = 0.0;
  double train_mse = 0.0;
  double test_mse = 0.0;
  double gap = 0.0;  // test_mse - train_mse
};

struct MseReport {
  std::vector<MseRow> rows;

  void print_table(std::ostream& os) const;
  void write_csv(const std::string& path) const;
};

/// Row-major grid of equally sized grayscale cells, ready for PGM output.
struct ImageGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t cell_h = 0;
  std::size_t cell_w = 0;
  std::vector<std::uint8_t> pixels;  // (rows*cell_h) x (cols*cell_w)

  std::size_t width() const { return cols * cell_w; }
  std::size_t height() const { return rows * cell_h; }
};

// Lays out the first rows*cols rows of images (each a flattened
// cell_h x cell_w raster in [0, 1]) into a grid; missing cells stay black.
ImageGrid compose_grid(const Tensor& images, std::size_t rows,
                       std::size_t cols, std::size_t cell_h,
                       std::size_t cell_w);

// Binary PGM (P5, maxval 255).
void write_pgm(const ImageGrid& grid, const std::string& path);

}  // namespace birvae

#endif  // BIRVAE_REPORT_HPP_
