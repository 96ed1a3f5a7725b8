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
#include "fedgin/optim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fedgin {

void AdamW::step(ModelParams& params, const GradMap& grads) {
  ++step_count_;
  const double bc1 = 1.0 - std::pow(static_cast<double>(cfg_.beta1), step_count_);
  const double bc2 = 1.0 - std::pow(static_cast<double>(cfg_.beta2), step_count_);
  for (const auto& [name, grad] : grads) {
    Tensor& p = params.at(name);
    check_same_shape(p, grad, "AdamW::step");
    if (!grad.all_finite()) {
      throw std::runtime_error("AdamW::step: non-finite gradient for parameter '" + name + "'");
    }
    auto mit = first_moment_.find(name);
    if (mit == first_moment_.end()) {
      mit = first_moment_.emplace(name, Tensor(p.shape())).first;
      second_moment_.emplace(name, Tensor(p.shape()));
    }
    Tensor& m = mit->second;
    Tensor& v = second_moment_.at(name);
    check_same_shape(m, p, "AdamW::step moment");
    const float b1 = cfg_.beta1, b2 = cfg_.beta2;
    for (std::int64_t i = 0; i < p.numel(); ++i) {
      const float gi = grad[i];
      m[i] = b1 * m[i] + (1.0f - b1) * gi;
      v[i] = b2 * v[i] + (1.0f - b2) * gi * gi;
      const float m_hat = static_cast<float>(m[i] / bc1);
      const float v_hat = static_cast<float>(v[i] / bc2);
      p[i] -= cfg_.lr * (m_hat / (std::sqrt(v_hat) + cfg_.eps) + cfg_.weight_decay * p[i]);
    }
  }
}

float PlateauScheduler::step(double validation_loss) {
  if (validation_loss < best_ - cfg_.min_delta) {
    best_ = validation_loss;
    bad_evals_ = 0;
    return lr_;
  }
  ++bad_evals_;
  if (bad_evals_ >= cfg_.patience) {
    lr_ = std::max(lr_ * cfg_.factor, cfg_.min_lr);
    bad_evals_ = 0;
  }
  return lr_;
}

}  // namespace fedgin
