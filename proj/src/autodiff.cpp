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
#include "fedgin/autodiff.hpp"

#include <stdexcept>

#include "fedgin/kernels.hpp"

namespace fedgin {

Tensor& Node::ensure_grad() {
  if (!has_grad) {
    grad = Tensor(value.shape());
    has_grad = true;
  }
  return grad;
}

void Node::accumulate(const Tensor& g) {
  if (!requires_grad) return;
  ensure_grad() += g;
}

Node* Graph::leaf(Tensor value, bool requires_grad, std::string name) {
  auto node = std::make_unique<Node>();
  node->value = std::move(value);
  node->requires_grad = requires_grad;
  node->name = std::move(name);
  node->index = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
  return nodes_.back().get();
}

Node* Graph::record(Tensor value, std::vector<Node*> parents,
                    std::function<void(Node&)> backward_fn) {
  auto node = std::make_unique<Node>();
  node->value = std::move(value);
  node->parents = std::move(parents);
  for (Node* p : node->parents) {
    if (p->requires_grad) {
      node->requires_grad = true;
      break;
    }
  }
  node->backward_fn = std::move(backward_fn);
  node->index = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
  return nodes_.back().get();
}

GradMap Graph::backward(Node* loss) {
  if (loss->value.numel() != 1) {
    throw std::invalid_argument("backward: loss must be scalar, got shape " +
                                loss->value.shape_str());
  }
  for (auto& n : nodes_) {
    if (n->has_grad) n->grad.fill(0.0f);
  }
  loss->ensure_grad().fill(1.0f);
  for (int i = loss->index; i >= 0; --i) {
    Node& node = *nodes_[static_cast<size_t>(i)];
    if (!node.has_grad || !node.requires_grad) continue;
    if (node.backward_fn) node.backward_fn(node);
  }
  GradMap grads;
  for (auto& n : nodes_) {
    if (!n->name.empty() && n->requires_grad && n->has_grad) {
      grads.emplace(n->name, n->grad);
    }
  }
  return grads;
}

Node* conv2d(Graph& g, Node* input, Node* weight, Node* bias, int stride, int padding) {
  Tensor out = conv2d_forward(input->value, weight->value, bias ? bias->value : Tensor(), stride,
                              padding);
  std::vector<Node*> parents{input, weight};
  if (bias) parents.push_back(bias);
  return g.record(std::move(out), std::move(parents),
                  [input, weight, bias, stride, padding](Node& node) {
                    Conv2dGrads grads =
                        conv2d_backward(node.grad, input->value, weight->value, stride, padding);
                    input->accumulate(grads.grad_input);
                    weight->accumulate(grads.grad_weight);
                    if (bias) bias->accumulate(grads.grad_bias);
                  });
}

Node* leaky_relu(Graph& g, Node* x, float slope) {
  if (slope <= 0.0f || slope >= 1.0f) {
    throw std::invalid_argument("leaky_relu: slope must lie in (0,1), got " +
                                std::to_string(slope));
  }
  return g.record(leaky_relu_forward(x->value, slope), {x}, [x, slope](Node& node) {
    x->accumulate(leaky_relu_backward(node.grad, x->value, slope));
  });
}

Node* maxpool2(Graph& g, Node* x) {
  auto argmax = std::make_shared<std::vector<std::int64_t>>();
  Tensor out = maxpool2_forward(x->value, *argmax);
  return g.record(std::move(out), {x}, [x, argmax](Node& node) {
    x->accumulate(maxpool2_backward(node.grad, *argmax, x->value.shape()));
  });
}

Node* upsample2(Graph& g, Node* x) {
  return g.record(upsample2_forward(x->value), {x}, [x](Node& node) {
    x->accumulate(upsample2_backward(node.grad, x->value.shape()));
  });
}

Node* concat_channels(Graph& g, Node* a, Node* b) {
  const int ca = a->value.dim(1);
  return g.record(concat_channels_forward(a->value, b->value), {a, b}, [a, b, ca](Node& node) {
    auto [ga, gb] = concat_channels_backward(node.grad, ca);
    a->accumulate(ga);
    b->accumulate(gb);
  });
}

Node* batch_norm(Graph& g, Node* x, Node* gamma, Node* beta, Tensor* running_mean,
                 Tensor* running_var, float momentum, float eps, bool train) {
  if (train) {
    auto saved = std::make_shared<BnBatchStats>();
    Tensor out = bn_forward_train(x->value, gamma->value, beta->value, *running_mean, *running_var,
                                  momentum, eps, *saved);
    return g.record(std::move(out), {x, gamma, beta}, [x, gamma, beta, saved](Node& node) {
      BnGrads grads = bn_backward_train(node.grad, x->value, gamma->value, *saved);
      x->accumulate(grads.grad_input);
      gamma->accumulate(grads.grad_gamma);
      beta->accumulate(grads.grad_beta);
    });
  }
  Tensor out = bn_forward_eval(x->value, gamma->value, beta->value, *running_mean, *running_var,
                               eps);
  // eval mode still needs grads when eval-mode loss feeds a scheduler probe
  Tensor mean_copy = *running_mean;
  Tensor var_copy = *running_var;
  auto stats = std::make_shared<std::pair<Tensor, Tensor>>(std::move(mean_copy),
                                                           std::move(var_copy));
  return g.record(std::move(out), {x, gamma, beta}, [x, gamma, beta, stats, eps](Node& node) {
    BnGrads grads =
        bn_backward_eval(node.grad, x->value, gamma->value, stats->first, stats->second, eps);
    x->accumulate(grads.grad_input);
    gamma->accumulate(grads.grad_gamma);
    beta->accumulate(grads.grad_beta);
  });
}

Node* add(Graph& g, Node* a, Node* b) {
  check_same_shape(a->value, b->value, "add");
  Tensor out = a->value;
  out += b->value;
  return g.record(std::move(out), {a, b}, [a, b](Node& node) {
    a->accumulate(node.grad);
    b->accumulate(node.grad);
  });
}

Node* scale(Graph& g, Node* x, float s) {
  Tensor out = x->value;
  out *= s;
  return g.record(std::move(out), {x}, [x, s](Node& node) {
    Tensor gi = node.grad;
    gi *= s;
    x->accumulate(gi);
  });
}

Node* sum(Graph& g, Node* x) {
  Tensor out = Tensor::scalar(static_cast<float>(x->value.sum()));
  return g.record(std::move(out), {x}, [x](Node& node) {
    const float gv = node.grad[0];
    Tensor gi(x->value.shape(), gv);
    x->accumulate(gi);
  });
}

Node* sum_squares(Graph& g, Node* x) {
  const double norm = x->value.frobenius_norm();
  Tensor out = Tensor::scalar(static_cast<float>(norm * norm));
  return g.record(std::move(out), {x}, [x](Node& node) {
    const float gv = node.grad[0];
    Tensor gi = x->value;
    gi *= 2.0f * gv;
    x->accumulate(gi);
  });
}

}  // namespace fedgin
