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

#include <cmath>
#include <functional>
#include <vector>

#include <doctest.h>

#include "fedgin/rng.hpp"
#include "fedgin/tensor.hpp"

namespace fedgin::testing {

inline Tensor random_tensor(Rng& rng, std::vector<int> shape, float stddev = 1.0f) {
  Tensor t(std::move(shape));
  for (std::int64_t i = 0; i < t.numel(); ++i) t[i] = normal(rng, 0.0f, stddev);
  return t;
}

inline double grad_rel_err(double analytic, double numeric) {
  return std::fabs(analytic - numeric) / std::max(1.0, std::fabs(numeric));
}

/// Central finite-difference check on `probes` random coordinates of one
/// input tensor. `loss` re-runs the full forward pass on the perturbed
/// tensor; `analytic` is the gradient under test.
inline void check_gradient(const std::function<double(const Tensor&)>& loss, Tensor input,
                           const Tensor& analytic, Rng& rng, int probes = 10, float h = 1e-3f,
                           double tol = 1e-3) {
  REQUIRE(analytic.shape() == input.shape());
  const std::int64_t n = input.numel();
  for (int probe = 0; probe < probes; ++probe) {
    const std::int64_t i = probes >= n ? probe % n
                                       : std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
    const float saved = input[i];
    input[i] = saved + h;
    const double up = loss(input);
    input[i] = saved - h;
    const double down = loss(input);
    input[i] = saved;
    const double numeric = (up - down) / (2.0 * static_cast<double>(h));
    INFO("coordinate ", i, " analytic=", analytic[i], " numeric=", numeric);
    CHECK(grad_rel_err(analytic[i], numeric) <= tol);
  }
}

/// Brute-force direct convolution; the oracle for conv2d_forward.
inline Tensor conv2d_oracle(const Tensor& in, const Tensor& w, const Tensor& b, int stride,
                            int pad) {
  const int N = in.dim(0), Cin = in.dim(1), H = in.dim(2), W = in.dim(3);
  const int Cout = w.dim(0), k = w.dim(2);
  const int Ho = (H + 2 * pad - k) / stride + 1;
  const int Wo = (W + 2 * pad - k) / stride + 1;
  Tensor out({N, Cout, Ho, Wo});
  for (int n = 0; n < N; ++n) {
    for (int co = 0; co < Cout; ++co) {
      for (int oy = 0; oy < Ho; ++oy) {
        for (int ox = 0; ox < Wo; ++ox) {
          double acc = b.empty() ? 0.0 : b[co];
          for (int ci = 0; ci < Cin; ++ci) {
            for (int ky = 0; ky < k; ++ky) {
              for (int kx = 0; kx < k; ++kx) {
                const int iy = oy * stride + ky - pad;
                const int ix = ox * stride + kx - pad;
                if (iy < 0 || iy >= H || ix < 0 || ix >= W) continue;
                acc += static_cast<double>(in.at({n, ci, iy, ix})) *
                       static_cast<double>(w.at({co, ci, ky, kx}));
              }
            }
          }
          out.at({n, co, oy, ox}) = static_cast<float>(acc);
        }
      }
    }
  }
  return out;
}

}  // namespace fedgin::testing
