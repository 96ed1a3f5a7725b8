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

#include <cstdint>
#include <map>
#include <string>

#include "fedgin/autodiff.hpp"
#include "fedgin/params.hpp"

namespace fedgin {

struct AdamWConfig {
  float lr = 5e-4f;
  float weight_decay = 1e-4f;
  float beta1 = 0.9f;
  float beta2 = 0.999f;
  float eps = 1e-8f;
};

/// Decoupled weight decay Adam. Moments are allocated lazily per parameter
/// and match the parameter shapes.
class AdamW {
 public:
  explicit AdamW(AdamWConfig cfg) : cfg_(cfg) {}

  /// Applies one update to every trainable entry named in `grads`.
  /// Throws on NaN/Inf gradients, naming the offending parameter.
  void step(ModelParams& params, const GradMap& grads);

  float lr() const { return cfg_.lr; }
  void set_lr(float lr) { cfg_.lr = lr; }
  std::int64_t step_count() const { return step_count_; }
  const AdamWConfig& config() const { return cfg_; }

 private:
  AdamWConfig cfg_;
  std::int64_t step_count_ = 0;
  std::map<std::string, Tensor> first_moment_;
  std::map<std::string, Tensor> second_moment_;
};

struct PlateauConfig {
  float factor = 0.5f;
  int patience = 5;
  float min_delta = 1e-4f;
  float min_lr = 1e-6f;
};

/// Reduce-on-plateau: after `patience` consecutive evaluations without an
/// improvement greater than min_delta, the rate is multiplied by `factor`,
/// never dropping below min_lr.
class PlateauScheduler {
 public:
  PlateauScheduler(PlateauConfig cfg, float initial_lr) : cfg_(cfg), lr_(initial_lr) {}

  /// Feeds one validation loss; returns the (possibly reduced) rate.
  float step(double validation_loss);

  float lr() const { return lr_; }

 private:
  PlateauConfig cfg_;
  float lr_;
  double best_ = std::numeric_limits<double>::infinity();
  int bad_evals_ = 0;
};

}  // namespace fedgin
