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

#ifndef BIRVAE_AUTODIFF_HPP_
#define BIRVAE_AUTODIFF_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "birvae/tensor.hpp"

namespace birvae {

struct Node;

/// Handle to a node of the computation graph. Operations on Vars record
/// operands and a backprop closure; backward() replays them in reverse
/// topological order.
using Var = std::shared_ptr<Node>;

struct Node {
  Tensor value;
  Tensor grad;  // allocated by backward(); same shape as value
  bool requires_grad = false;
  bool trainable = false;  // trainable leaf (network parameter)
  std::vector<Var> parents;
  // Propagates this node's grad into its parents' grads.
  std::function<void(const Node&)> backprop;
  std::string name;  // diagnostics only
};

// Trainable leaves receive gradients in backward(); plain leaves do too if
// requires_grad is set (used by gradient tests on activations).
Var make_leaf(Tensor value, bool trainable = false, std::string name = "");

// Constant: no gradient is tracked through it.
Var make_const(Tensor value, std::string name = "");

// --- differentiable operations -------------------------------------------

// Standard matrix product [m x k] * [k x n] -> [m x n].
Var matmul(const Var& a, const Var& b);

// x*w + bias broadcast over rows: [b x n] * [n x m] + [m] -> [b x m].
Var affine(const Var& x, const Var& w, const Var& bias);

Var relu(const Var& x);     // subgradient at 0 is 0
Var sigmoid(const Var& x);  // output in (0, 1)
Var vexp(const Var& x);
Var clamp_min(const Var& x, double lo);  // zero gradient where clamped

Var add(const Var& a, const Var& b);  // same shape, elementwise
Var mul(const Var& a, const Var& b);  // Hadamard product
Var scale(const Var& a, double c);

// Mean over rows of the per-row sum of squared differences. This is the
// per-image-sum MSE convention used everywhere in this project.
Var mse(const Var& a, const Var& b);

// --- backward pass ---------------------------------------------------------

// Accumulates d(root)/d(node) into node.grad for every node reachable from
// root that requires a gradient. root must be scalar. Grad buffers of the
// reachable subgraph are reset first, so calling backward twice on fresh
// graphs that share leaves does not double-count.
void backward(const Var& root);

// Non-differentiating helpers shared with plain-tensor code paths.
Tensor matmul_value(const Tensor& a, const Tensor& b);
Tensor affine_value(const Tensor& x, const Tensor& w, const Tensor& bias);
Tensor relu_value(const Tensor& x);
Tensor sigmoid_value(const Tensor& x);
double mse_value(const Tensor& a, const Tensor& b);

}  // namespace birvae

#endif  // BIRVAE_AUTODIFF_HPP_
