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

#ifndef BIRVAE_ADAM_HPP_
#define BIRVAE_ADAM_HPP_

#include <cstdint>
#include <vector>

#include "birvae/autodiff.hpp"

namespace birvae {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// First/second moment accumulators, one pair per parameter, plus the
/// shared step counter. Moment shapes always match their parameter.
struct AdamState {
  AdamConfig cfg;
  std::vector<Tensor> m;
  std::vector<Tensor> v;
  std::uint64_t t = 0;

  void init(const std::vector<Var>& params);
};

// One bias-corrected Adam update of every parameter from its .grad.
// Increments state.t by exactly 1. A non-finite gradient aborts with a
// NumericError naming the offending parameter.
void adam_step(std::vector<Var>& params, AdamState& state);

}  // namespace birvae

#endif  // BIRVAE_ADAM_HPP_
