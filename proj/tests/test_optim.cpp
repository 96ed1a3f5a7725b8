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
#include <doctest.h>

#include <cmath>

#include "fedgin/optim.hpp"
#include "fedgin/rng.hpp"
#include "testing_util.hpp"

using namespace fedgin;

TEST_CASE("adamw zero gradients and zero decay leave params unchanged") {
  ModelParams params;
  params.add("w", Tensor({4}, {1.0f, -2.0f, 3.0f, 0.5f}));
  AdamW opt(AdamWConfig{.lr = 1e-2f, .weight_decay = 0.0f});
  GradMap grads;
  grads.emplace("w", Tensor({4}));
  for (int step = 0; step < 5; ++step) opt.step(params, grads);
  CHECK(params.at("w")[0] == 1.0f);
  CHECK(params.at("w")[1] == -2.0f);
  CHECK(params.at("w")[2] == 3.0f);
  CHECK(params.at("w")[3] == 0.5f);
  CHECK(opt.step_count() == 5);
}

TEST_CASE("adamw zero gradients with decay scale params by (1 - lr*decay)") {
  ModelParams params;
  params.add("w", Tensor({2}, {2.0f, -4.0f}));
  const float lr = 1e-2f, decay = 0.5f;
  AdamW opt(AdamWConfig{.lr = lr, .weight_decay = decay});
  GradMap grads;
  grads.emplace("w", Tensor({2}));
  float expect0 = 2.0f, expect1 = -4.0f;
  for (int step = 0; step < 3; ++step) {
    opt.step(params, grads);
    expect0 *= (1.0f - lr * decay);
    expect1 *= (1.0f - lr * decay);
    CHECK(params.at("w")[0] == doctest::Approx(expect0).epsilon(1e-6));
    CHECK(params.at("w")[1] == doctest::Approx(expect1).epsilon(1e-6));
  }
}

TEST_CASE("adamw single step matches closed form") {
  const float w0 = 0.75f, lr = 1e-3f, decay = 1e-4f;
  const float b1 = 0.9f, b2 = 0.999f, eps = 1e-8f;
  ModelParams params;
  params.add("w", Tensor({1}, {w0}));
  AdamW opt(AdamWConfig{.lr = lr, .weight_decay = decay, .beta1 = b1, .beta2 = b2, .eps = eps});
  GradMap grads;
  grads.emplace("w", Tensor({1}, {1.0f}));
  opt.step(params, grads);

  // hand-evaluated update for g=1 at t=1
  const double m_hat = ((1.0 - b1) * 1.0) / (1.0 - b1);
  const double v_hat = ((1.0 - b2) * 1.0) / (1.0 - b2);
  const double expect = w0 - lr * (m_hat / (std::sqrt(v_hat) + eps) + decay * w0);
  CHECK(params.at("w")[0] == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("adamw converges on a quadratic") {
  ModelParams params;
  params.add("w", Tensor({1}, {5.0f}));
  AdamW opt(AdamWConfig{.lr = 0.1f, .weight_decay = 0.0f});
  for (int step = 0; step < 200; ++step) {
    GradMap grads;
    grads.emplace("w", Tensor({1}, {2.0f * params.at("w")[0]}));
    opt.step(params, grads);
  }
  CHECK(std::fabs(params.at("w")[0]) < 1e-2f);
}

TEST_CASE("adamw rejects non-finite gradients with the parameter name") {
  ModelParams params;
  params.add("conv1.weight", Tensor({2}, 1.0f));
  AdamW opt(AdamWConfig{});
  GradMap grads;
  grads.emplace("conv1.weight", Tensor({2}, {std::nanf(""), 0.0f}));
  CHECK_THROWS_WITH_AS(opt.step(params, grads), doctest::Contains("conv1.weight"),
                       std::runtime_error);
}

TEST_CASE("plateau scheduler keeps rate while improving") {
  PlateauScheduler sched(PlateauConfig{.factor = 0.5f, .patience = 3, .min_delta = 1e-4f}, 1.0f);
  double loss = 10.0;
  for (int i = 0; i < 20; ++i) {
    CHECK(sched.step(loss) == 1.0f);
    loss -= 0.1;
  }
}

TEST_CASE("plateau scheduler halves rate on the fourth stagnant call") {
  PlateauScheduler sched(PlateauConfig{.factor = 0.5f, .patience = 3, .min_delta = 1e-4f}, 1.0f);
  CHECK(sched.step(1.0) == 1.0f);
  CHECK(sched.step(1.0) == 1.0f);
  CHECK(sched.step(1.0) == 1.0f);
  CHECK(sched.step(1.0) == 0.5f);
}

TEST_CASE("plateau scheduler respects the minimum rate") {
  PlateauScheduler sched(
      PlateauConfig{.factor = 0.1f, .patience = 1, .min_delta = 1e-4f, .min_lr = 1e-3f}, 1.0f);
  float lr = 1.0f;
  for (int i = 0; i < 10; ++i) lr = sched.step(7.0);
  CHECK(lr == 1e-3f);
}

TEST_CASE("plateau scheduler improvement resets the stagnation counter") {
  PlateauScheduler sched(PlateauConfig{.factor = 0.5f, .patience = 2, .min_delta = 1e-4f}, 1.0f);
  CHECK(sched.step(1.0) == 1.0f);   // sets best
  CHECK(sched.step(1.0) == 1.0f);   // stagnant 1
  CHECK(sched.step(0.5) == 1.0f);   // improvement, counter resets
  CHECK(sched.step(0.5) == 1.0f);   // stagnant 1
  CHECK(sched.step(0.5) == 0.5f);   // stagnant 2 -> reduce
}
