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

#include <tuple>
#include <vector>

#include "fedgin/tensor.hpp"

namespace fedgin {

/// Plain tensor kernels shared by the autodiff layer and by code that needs
/// raw forward passes (GIN augmentation, evaluation).

int conv_out_dim(int in, int kernel, int stride, int padding);

/// input [N,Cin,H,W], weight [Cout,Cin,k,k], bias [Cout] (may be empty).
/// kernel must be odd and square, stride >= 1, padding >= 0.
Tensor conv2d_forward(const Tensor& input, const Tensor& weight, const Tensor& bias, int stride,
                      int padding);

struct Conv2dGrads {
  Tensor grad_input;
  Tensor grad_weight;
  Tensor grad_bias;
};

Conv2dGrads conv2d_backward(const Tensor& grad_out, const Tensor& input, const Tensor& weight,
                            int stride, int padding);

Tensor leaky_relu_forward(const Tensor& x, float slope);
Tensor leaky_relu_backward(const Tensor& grad_out, const Tensor& x, float slope);

/// 2x2 max pooling with stride 2; H and W must be even.
/// argmax records the flat input offset chosen per output element.
Tensor maxpool2_forward(const Tensor& x, std::vector<std::int64_t>& argmax);
Tensor maxpool2_backward(const Tensor& grad_out, const std::vector<std::int64_t>& argmax,
                         const std::vector<int>& input_shape);

/// Nearest-neighbor 2x upsampling.
Tensor upsample2_forward(const Tensor& x);
Tensor upsample2_backward(const Tensor& grad_out, const std::vector<int>& input_shape);

/// Channel concatenation of [N,Ca,H,W] and [N,Cb,H,W].
Tensor concat_channels_forward(const Tensor& a, const Tensor& b);
std::pair<Tensor, Tensor> concat_channels_backward(const Tensor& grad_out, int channels_a);

struct BnBatchStats {
  std::vector<float> mean;
  std::vector<float> inv_std;  // 1/sqrt(var + eps), biased variance
};

/// Train-mode batch norm over (N,H,W) per channel. Updates running_mean and
/// running_var in place with `momentum` and returns the batch statistics
/// needed by the backward pass.
Tensor bn_forward_train(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                        Tensor& running_mean, Tensor& running_var, float momentum, float eps,
                        BnBatchStats& saved);

Tensor bn_forward_eval(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                       const Tensor& running_mean, const Tensor& running_var, float eps);

struct BnGrads {
  Tensor grad_input;
  Tensor grad_gamma;
  Tensor grad_beta;
};

BnGrads bn_backward_train(const Tensor& grad_out, const Tensor& x, const Tensor& gamma,
                          const BnBatchStats& saved);

BnGrads bn_backward_eval(const Tensor& grad_out, const Tensor& x, const Tensor& gamma,
                         const Tensor& running_mean, const Tensor& running_var, float eps);

}  // namespace fedgin
