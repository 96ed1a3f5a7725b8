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

// Rough throughput probe for the convolution kernels; not part of the
// test suite.

#include <chrono>
#include <cstdio>

#include "fedgin/kernels.hpp"
#include "fedgin/parallel.hpp"
#include "fedgin/rng.hpp"

using namespace fedgin;

namespace {

Tensor randn(Rng& rng, std::vector<int> shape) {
  Tensor t(std::move(shape));
  for (std::int64_t i = 0; i < t.numel(); ++i) t[i] = normal(rng);
  return t;
}

double bench(const Tensor& in, const Tensor& w, const Tensor& b, int iters) {
  auto t0 = std::chrono::steady_clock::now();
  float sink = 0.0f;
  for (int i = 0; i < iters; ++i) {
    Tensor out = conv2d_forward(in, w, b, 1, 1);
    Conv2dGrads g = conv2d_backward(out, in, w, 1, 1);
    sink += g.grad_weight[0];
  }
  auto t1 = std::chrono::steady_clock::now();
  std::printf("(sink %g) ", static_cast<double>(sink));
  return std::chrono::duration<double>(t1 - t0).count() / iters;
}

}  // namespace

int main() {
  Rng rng = make_rng(1);
  struct Case {
    int n, cin, cout, hw;
  };
  const Case cases[] = {{8, 8, 8, 32}, {8, 16, 16, 16}, {8, 32, 32, 8}, {8, 24, 8, 32},
                        {8, 48, 16, 16}};
  for (const auto& c : cases) {
    Tensor in = randn(rng, {c.n, c.cin, c.hw, c.hw});
    Tensor w = randn(rng, {c.cout, c.cin, 3, 3});
    Tensor b = randn(rng, {c.cout});
    const double serial = bench(in, w, b, 20);
    ThreadPool pool(2);
    PoolScope scope(&pool);
    const double parallel = bench(in, w, b, 20);
    const double macs = 2.0 * c.n * c.cin * c.cout * 9.0 * c.hw * c.hw * 3.0;  // fwd+bwd approx
    std::printf("N=%d %d->%d %dx%d: serial %.3f ms (%.2f GFLOP/s), 2 threads %.3f ms\n", c.n,
                c.cin, c.cout, c.hw, c.hw, serial * 1e3, macs / serial * 1e-9, parallel * 1e3);
  }
  return 0;
}
