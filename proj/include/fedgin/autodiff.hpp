/**
 * Copyright 2026 The FedGIN Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fedgin/tensor.hpp"

namespace fedgin {

class Graph;

/// One operation record on the tape. `value` is the forward result; `grad`
/// accumulates d(loss)/d(value) during the backward sweep.
struct Node {
  Tensor value;
  Tensor grad;
  bool has_grad = false;
  bool requires_grad = false;
  std::string name;  // non-empty only for named leaves (parameters)
  int index = -1;    // creation order; parents always precede children
  std::vector<Node*> parents;
  std::function<void(Node&)> backward_fn;

  Tensor& ensure_grad();
  /// Adds g into this node's gradient accumulator (no-op unless grads are
  /// being tracked through this node).
  void accumulate(const Tensor& g);
};

using GradMap = std::map<std::string, Tensor>;

/// Reverse-mode tape. Build one per training step; nodes are recorded in
/// topological order by construction.
class Graph {
 public:
  Node* leaf(Tensor value, bool requires_grad = false, std::string name = {});

  /// Records an op node. The backward_fn reads node.grad and accumulates
  /// into the parents.
  Node* record(Tensor value, std::vector<Node*> parents, std::function<void(Node&)> backward_fn);

  /// Runs the backward sweep from a scalar loss node and returns gradients
  /// of all named leaves. Throws if the loss is not scalar.
  GradMap backward(Node* loss);

  size_t node_count() const { return nodes_.size(); }

 private:
  std::vector<std::unique_ptr<Node>> nodes_;
};

// --- differentiable ops --------------------------------------------------

Node* conv2d(Graph& g, Node* input, Node* weight, Node* bias, int stride, int padding);
Node* leaky_relu(Graph& g, Node* x, float slope);
Node* maxpool2(Graph& g, Node* x);
Node* upsample2(Graph& g, Node* x);
Node* concat_channels(Graph& g, Node* a, Node* b);

/// Batch norm with running statistics held outside the graph. In train mode
/// the addressed running stats are updated in place as a side effect.
Node* batch_norm(Graph& g, Node* x, Node* gamma, Node* beta, Tensor* running_mean,
                 Tensor* running_var, float momentum, float eps, bool train);

Node* add(Graph& g, Node* a, Node* b);
Node* scale(Graph& g, Node* x, float s);
Node* sum(Graph& g, Node* x);
Node* sum_squares(Graph& g, Node* x);

}  // namespace fedgin
