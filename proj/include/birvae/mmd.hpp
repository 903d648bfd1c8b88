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

#ifndef BIRVAE_MMD_HPP_
#define BIRVAE_MMD_HPP_

#include <span>

#include "birvae/autodiff.hpp"
#include "birvae/rng.hpp"
#include "birvae/tensor.hpp"

namespace birvae {

/// Gaussian kernel bandwidth. k(x, x') = exp(-|x - x'|^2 / (2 sigma_k^2)).
struct KernelSpec {
  double sigma_k = 1.0;
};

double gaussian_kernel(std::span<const double> x, std::span<const double> x2,
                       const KernelSpec& spec);

// Biased V-statistic estimate of squared MMD between the row sets of
// xs [n x d] and ys [m x d]:
//   mean(k over xs*xs) + mean(k over ys*ys) - 2 mean(k over xs*ys).
// Always >= 0 up to rounding. The kernel matrices are formed with a
// vectorized squared-distance expansion; tests pin it to the explicit
// double loop.
double mmd2_value(const Tensor& xs, const Tensor& ys, const KernelSpec& spec);

// Differentiable version; gradients flow into whichever operands require
// them.
Var mmd2(const Var& xs, const Var& ys, const KernelSpec& spec);

// mmd2 between zs and a fresh N(0, I) sample of the same size, drawn from
// rng. The prior sample is a constant: gradient flows only into zs.
Var mmd_to_standard_normal(const Var& zs, Rng& rng, const KernelSpec& spec);

}  // namespace birvae

#endif  // BIRVAE_MMD_HPP_
