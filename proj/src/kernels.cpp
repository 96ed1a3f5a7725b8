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
#include "fedgin/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fedgin/parallel.hpp"

namespace fedgin {

namespace {

void check_conv_args(const Tensor& input, const Tensor& weight, const Tensor& bias, int stride,
                     int padding) {
  if (input.rank() != 4) {
    throw std::invalid_argument("conv2d: input must be [N,Cin,H,W], got " + input.shape_str());
  }
  if (weight.rank() != 4) {
    throw std::invalid_argument("conv2d: weight must be [Cout,Cin,k,k], got " +
                                weight.shape_str());
  }
  if (weight.dim(2) != weight.dim(3)) {
    throw std::invalid_argument("conv2d: kernel must be square, got " + weight.shape_str());
  }
  const int k = weight.dim(2);
  if (k % 2 == 0) {
    throw std::invalid_argument("conv2d: kernel size must be odd, got " + std::to_string(k));
  }
  if (stride < 1) throw std::invalid_argument("conv2d: stride must be >= 1");
  if (padding < 0) throw std::invalid_argument("conv2d: padding must be >= 0");
  if (input.dim(1) != weight.dim(1)) {
    throw std::invalid_argument("conv2d: input channel count does not match weight: input " +
                                input.shape_str() + " vs weight " + weight.shape_str());
  }
  if (!bias.empty() && (bias.rank() != 1 || bias.dim(0) != weight.dim(0))) {
    throw std::invalid_argument("conv2d: bias must be [Cout]=" + std::to_string(weight.dim(0)) +
                                ", got " + bias.shape_str());
  }
}

// out[plane oy,ox] += wv * in[plane iy,ix], iy = oy*stride+ky-pad.
// Row-clipped accumulation; stride 1 hits a contiguous axpy.
inline void accumulate_kernel_tap(float* out_plane, const float* in_plane, float wv, int H, int W,
                                  int Ho, int Wo, int ky, int kx, int stride, int pad) {
  for (int oy = 0; oy < Ho; ++oy) {
    const int iy = oy * stride + ky - pad;
    if (iy < 0 || iy >= H) continue;
    // valid ox: 0 <= ox*stride + kx - pad < W
    int ox0 = 0;
    if (kx - pad < 0) ox0 = (pad - kx + stride - 1) / stride;
    int ox1 = Wo;  // exclusive
    {
      const int max_ix = W - 1 - (kx - pad);
      if (max_ix < 0) continue;
      ox1 = std::min(ox1, max_ix / stride + 1);
    }
    if (ox0 >= ox1) continue;
    float* out_row = out_plane + static_cast<std::int64_t>(oy) * Wo;
    const float* in_row = in_plane + static_cast<std::int64_t>(iy) * W + (kx - pad);
    if (stride == 1) {
      for (int ox = ox0; ox < ox1; ++ox) out_row[ox] += wv * in_row[ox];
    } else {
      for (int ox = ox0; ox < ox1; ++ox) out_row[ox] += wv * in_row[ox * stride];
    }
  }
}

}  // namespace

int conv_out_dim(int in, int kernel, int stride, int padding) {
  const int span = in + 2 * padding - kernel;
  if (span < 0) {
    throw std::invalid_argument("conv2d: kernel " + std::to_string(kernel) +
                                " larger than padded input " + std::to_string(in + 2 * padding));
  }
  return span / stride + 1;
}

Tensor conv2d_forward(const Tensor& input, const Tensor& weight, const Tensor& bias, int stride,
                      int padding) {
  check_conv_args(input, weight, bias, stride, padding);
  const int N = input.dim(0), Cin = input.dim(1), H = input.dim(2), W = input.dim(3);
  const int Cout = weight.dim(0), k = weight.dim(2);
  const int Ho = conv_out_dim(H, k, stride, padding);
  const int Wo = conv_out_dim(W, k, stride, padding);

  Tensor out({N, Cout, Ho, Wo});
  const float* in_data = input.data();
  const float* w_data = weight.data();
  const float* b_data = bias.empty() ? nullptr : bias.data();
  float* out_data = out.data();
  const std::int64_t in_plane_sz = static_cast<std::int64_t>(H) * W;
  const std::int64_t out_plane_sz = static_cast<std::int64_t>(Ho) * Wo;

  parallel_chunks(static_cast<std::int64_t>(N) * Cout, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t p = begin; p < end; ++p) {
      const int n = static_cast<int>(p / Cout);
      const int co = static_cast<int>(p % Cout);
      float* out_plane = out_data + p * out_plane_sz;
      const float bv = b_data ? b_data[co] : 0.0f;
      for (std::int64_t i = 0; i < out_plane_sz; ++i) out_plane[i] = bv;
      for (int ci = 0; ci < Cin; ++ci) {
        const float* in_plane = in_data + (static_cast<std::int64_t>(n) * Cin + ci) * in_plane_sz;
        const float* w_tap = w_data + ((static_cast<std::int64_t>(co) * Cin + ci) * k) * k;
        for (int ky = 0; ky < k; ++ky) {
          for (int kx = 0; kx < k; ++kx) {
            accumulate_kernel_tap(out_plane, in_plane, w_tap[ky * k + kx], H, W, Ho, Wo, ky, kx,
                                  stride, padding);
          }
        }
      }
    }
  });
  return out;
}

Conv2dGrads conv2d_backward(const Tensor& grad_out, const Tensor& input, const Tensor& weight,
                            int stride, int padding) {
  check_conv_args(input, weight, Tensor(), stride, padding);
  const int N = input.dim(0), Cin = input.dim(1), H = input.dim(2), W = input.dim(3);
  const int Cout = weight.dim(0), k = weight.dim(2);
  const int Ho = conv_out_dim(H, k, stride, padding);
  const int Wo = conv_out_dim(W, k, stride, padding);
  const std::vector<int> expect{N, Cout, Ho, Wo};
  if (grad_out.shape() != expect) {
    throw std::invalid_argument("conv2d_backward: grad_out shape " + grad_out.shape_str() +
                                " does not match conv output " + shape_str(expect));
  }

  Conv2dGrads grads{Tensor({N, Cin, H, W}), Tensor({Cout, Cin, k, k}), Tensor({Cout})};
  const float* go_data = grad_out.data();
  const float* in_data = input.data();
  const float* w_data = weight.data();
  const std::int64_t in_plane_sz = static_cast<std::int64_t>(H) * W;
  const std::int64_t out_plane_sz = static_cast<std::int64_t>(Ho) * Wo;

  // grad_bias[co] = sum of grad_out over n, oy, ox
  for (int co = 0; co < Cout; ++co) {
    double acc = 0.0;
    for (int n = 0; n < N; ++n) {
      const float* go_plane = go_data + (static_cast<std::int64_t>(n) * Cout + co) * out_plane_sz;
      for (std::int64_t i = 0; i < out_plane_sz; ++i) acc += go_plane[i];
    }
    grads.grad_bias[co] = static_cast<float>(acc);
  }

  // grad_input: for stride 1 this is correlation of grad_out with the
  // 180-degree rotated kernel at padding k-1-pad; generic strides scatter.
  float* gi_data = grads.grad_input.data();
  if (stride == 1) {
    parallel_chunks(static_cast<std::int64_t>(N) * Cin, [&](std::int64_t begin, std::int64_t end) {
      for (std::int64_t p = begin; p < end; ++p) {
        const int n = static_cast<int>(p / Cin);
        const int ci = static_cast<int>(p % Cin);
        float* gi_plane = gi_data + p * in_plane_sz;
        for (int co = 0; co < Cout; ++co) {
          const float* go_plane =
              go_data + (static_cast<std::int64_t>(n) * Cout + co) * out_plane_sz;
          const float* w_tap = w_data + ((static_cast<std::int64_t>(co) * Cin + ci) * k) * k;
          for (int ky = 0; ky < k; ++ky) {
            for (int kx = 0; kx < k; ++kx) {
              // rotated kernel tap
              const float wv = w_tap[(k - 1 - ky) * k + (k - 1 - kx)];
              accumulate_kernel_tap(gi_plane, go_plane, wv, Ho, Wo, H, W, ky, kx, 1,
                                    k - 1 - padding);
            }
          }
        }
      }
    });
  } else {
    for (int n = 0; n < N; ++n) {
      for (int co = 0; co < Cout; ++co) {
        const float* go_plane =
            go_data + (static_cast<std::int64_t>(n) * Cout + co) * out_plane_sz;
        for (int oy = 0; oy < Ho; ++oy) {
          for (int ox = 0; ox < Wo; ++ox) {
            const float gv = go_plane[static_cast<std::int64_t>(oy) * Wo + ox];
            if (gv == 0.0f) continue;
            for (int ci = 0; ci < Cin; ++ci) {
              float* gi_plane =
                  gi_data + (static_cast<std::int64_t>(n) * Cin + ci) * in_plane_sz;
              const float* w_tap = w_data + ((static_cast<std::int64_t>(co) * Cin + ci) * k) * k;
              for (int ky = 0; ky < k; ++ky) {
                const int iy = oy * stride + ky - padding;
                if (iy < 0 || iy >= H) continue;
                for (int kx = 0; kx < k; ++kx) {
                  const int ix = ox * stride + kx - padding;
                  if (ix < 0 || ix >= W) continue;
                  gi_plane[static_cast<std::int64_t>(iy) * W + ix] += gv * w_tap[ky * k + kx];
                }
              }
            }
          }
        }
      }
    }
  }

  // grad_weight[co,ci,ky,kx] = sum over n, oy, ox of grad_out * input tap
  float* gw_data = grads.grad_weight.data();
  parallel_chunks(Cout, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t co = begin; co < end; ++co) {
      for (int ci = 0; ci < Cin; ++ci) {
        for (int ky = 0; ky < k; ++ky) {
          for (int kx = 0; kx < k; ++kx) {
            double acc = 0.0;
            for (int n = 0; n < N; ++n) {
              const float* go_plane =
                  go_data + (static_cast<std::int64_t>(n) * Cout + co) * out_plane_sz;
              const float* in_plane =
                  in_data + (static_cast<std::int64_t>(n) * Cin + ci) * in_plane_sz;
              for (int oy = 0; oy < Ho; ++oy) {
                const int iy = oy * stride + ky - padding;
                if (iy < 0 || iy >= H) continue;
                int ox0 = 0;
                if (kx - padding < 0) ox0 = (padding - kx + stride - 1) / stride;
                const int max_ix = W - 1 - (kx - padding);
                if (max_ix < 0) continue;
                const int ox1 = std::min(Wo, max_ix / stride + 1);
                const float* go_row = go_plane + static_cast<std::int64_t>(oy) * Wo;
                const float* in_row = in_plane + static_cast<std::int64_t>(iy) * W + (kx - padding);
                float dot = 0.0f;
                if (stride == 1) {
                  for (int ox = ox0; ox < ox1; ++ox) dot += go_row[ox] * in_row[ox];
                } else {
                  for (int ox = ox0; ox < ox1; ++ox) dot += go_row[ox] * in_row[ox * stride];
                }
                acc += dot;
              }
            }
            gw_data[((co * Cin + ci) * k + ky) * k + kx] = static_cast<float>(acc);
          }
        }
      }
    }
  });

  return grads;
}

Tensor leaky_relu_forward(const Tensor& x, float slope) {
  Tensor out(x.shape());
  const float* in = x.data();
  float* o = out.data();
  const std::int64_t n = x.numel();
  for (std::int64_t i = 0; i < n; ++i) o[i] = in[i] >= 0.0f ? in[i] : slope * in[i];
  return out;
}

Tensor leaky_relu_backward(const Tensor& grad_out, const Tensor& x, float slope) {
  check_same_shape(grad_out, x, "leaky_relu_backward");
  Tensor gi(x.shape());
  const float* go = grad_out.data();
  const float* in = x.data();
  float* g = gi.data();
  const std::int64_t n = x.numel();
  for (std::int64_t i = 0; i < n; ++i) g[i] = in[i] >= 0.0f ? go[i] : slope * go[i];
  return gi;
}

Tensor maxpool2_forward(const Tensor& x, std::vector<std::int64_t>& argmax) {
  if (x.rank() != 4) throw std::invalid_argument("maxpool2: input must be 4-d");
  const int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
  if (H % 2 != 0 || W % 2 != 0) {
    throw std::invalid_argument("maxpool2: H and W must be even, got " + x.shape_str());
  }
  const int Ho = H / 2, Wo = W / 2;
  Tensor out({N, C, Ho, Wo});
  argmax.assign(static_cast<size_t>(out.numel()), 0);
  const float* in = x.data();
  float* o = out.data();
  std::int64_t oi = 0;
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(N) * C; ++p) {
    const float* plane = in + p * H * W;
    const std::int64_t plane_off = p * H * W;
    for (int oy = 0; oy < Ho; ++oy) {
      for (int ox = 0; ox < Wo; ++ox, ++oi) {
        const int iy = oy * 2, ix = ox * 2;
        std::int64_t best = static_cast<std::int64_t>(iy) * W + ix;
        float bv = plane[best];
        const std::int64_t cand[3] = {best + 1, best + W, best + W + 1};
        for (std::int64_t c : cand) {
          if (plane[c] > bv) {
            bv = plane[c];
            best = c;
          }
        }
        o[oi] = bv;
        argmax[static_cast<size_t>(oi)] = plane_off + best;
      }
    }
  }
  return out;
}

Tensor maxpool2_backward(const Tensor& grad_out, const std::vector<std::int64_t>& argmax,
                         const std::vector<int>& input_shape) {
  Tensor gi(input_shape);
  const float* go = grad_out.data();
  float* g = gi.data();
  for (std::int64_t i = 0; i < grad_out.numel(); ++i) {
    g[argmax[static_cast<size_t>(i)]] += go[i];
  }
  return gi;
}

Tensor upsample2_forward(const Tensor& x) {
  if (x.rank() != 4) throw std::invalid_argument("upsample2: input must be 4-d");
  const int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
  Tensor out({N, C, H * 2, W * 2});
  const float* in = x.data();
  float* o = out.data();
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(N) * C; ++p) {
    const float* ip = in + p * H * W;
    float* op = o + p * H * W * 4;
    for (int y = 0; y < H * 2; ++y) {
      const float* irow = ip + static_cast<std::int64_t>(y / 2) * W;
      float* orow = op + static_cast<std::int64_t>(y) * W * 2;
      for (int x2 = 0; x2 < W * 2; ++x2) orow[x2] = irow[x2 / 2];
    }
  }
  return out;
}

Tensor upsample2_backward(const Tensor& grad_out, const std::vector<int>& input_shape) {
  Tensor gi(input_shape);
  const int N = input_shape[0], C = input_shape[1], H = input_shape[2], W = input_shape[3];
  const float* go = grad_out.data();
  float* g = gi.data();
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(N) * C; ++p) {
    const float* gop = go + p * H * W * 4;
    float* gp = g + p * H * W;
    for (int y = 0; y < H * 2; ++y) {
      const float* grow = gop + static_cast<std::int64_t>(y) * W * 2;
      float* irow = gp + static_cast<std::int64_t>(y / 2) * W;
      for (int x2 = 0; x2 < W * 2; ++x2) irow[x2 / 2] += grow[x2];
    }
  }
  return gi;
}

Tensor concat_channels_forward(const Tensor& a, const Tensor& b) {
  if (a.rank() != 4 || b.rank() != 4 || a.dim(0) != b.dim(0) || a.dim(2) != b.dim(2) ||
      a.dim(3) != b.dim(3)) {
    throw std::invalid_argument("concat_channels: incompatible shapes " + a.shape_str() + " and " +
                                b.shape_str());
  }
  const int N = a.dim(0), Ca = a.dim(1), Cb = b.dim(1), H = a.dim(2), W = a.dim(3);
  Tensor out({N, Ca + Cb, H, W});
  const std::int64_t plane = static_cast<std::int64_t>(H) * W;
  for (int n = 0; n < N; ++n) {
    std::copy_n(a.data() + static_cast<std::int64_t>(n) * Ca * plane, Ca * plane,
                out.data() + static_cast<std::int64_t>(n) * (Ca + Cb) * plane);
    std::copy_n(b.data() + static_cast<std::int64_t>(n) * Cb * plane, Cb * plane,
                out.data() + (static_cast<std::int64_t>(n) * (Ca + Cb) + Ca) * plane);
  }
  return out;
}

std::pair<Tensor, Tensor> concat_channels_backward(const Tensor& grad_out, int channels_a) {
  const int N = grad_out.dim(0), C = grad_out.dim(1), H = grad_out.dim(2), W = grad_out.dim(3);
  const int Ca = channels_a, Cb = C - channels_a;
  Tensor ga({N, Ca, H, W}), gb({N, Cb, H, W});
  const std::int64_t plane = static_cast<std::int64_t>(H) * W;
  for (int n = 0; n < N; ++n) {
    std::copy_n(grad_out.data() + static_cast<std::int64_t>(n) * C * plane, Ca * plane,
                ga.data() + static_cast<std::int64_t>(n) * Ca * plane);
    std::copy_n(grad_out.data() + (static_cast<std::int64_t>(n) * C + Ca) * plane, Cb * plane,
                gb.data() + static_cast<std::int64_t>(n) * Cb * plane);
  }
  return {std::move(ga), std::move(gb)};
}

namespace {

void check_bn_args(const Tensor& x, const Tensor& gamma, const Tensor& beta) {
  if (x.rank() != 4) throw std::invalid_argument("batch_norm: input must be [N,C,H,W]");
  const int C = x.dim(1);
  if (gamma.numel() != C || beta.numel() != C) {
    throw std::invalid_argument("batch_norm: gamma/beta must have C=" + std::to_string(C) +
                                " elements");
  }
}

}  // namespace

Tensor bn_forward_train(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                        Tensor& running_mean, Tensor& running_var, float momentum, float eps,
                        BnBatchStats& saved) {
  check_bn_args(x, gamma, beta);
  const int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
  const std::int64_t plane = static_cast<std::int64_t>(H) * W;
  const std::int64_t count = static_cast<std::int64_t>(N) * plane;
  saved.mean.assign(static_cast<size_t>(C), 0.0f);
  saved.inv_std.assign(static_cast<size_t>(C), 0.0f);
  Tensor out(x.shape());
  const float* in = x.data();
  float* o = out.data();
  for (int c = 0; c < C; ++c) {
    double sum = 0.0, sum_sq = 0.0;
    for (int n = 0; n < N; ++n) {
      const float* p = in + (static_cast<std::int64_t>(n) * C + c) * plane;
      for (std::int64_t i = 0; i < plane; ++i) {
        sum += p[i];
        sum_sq += static_cast<double>(p[i]) * p[i];
      }
    }
    const double mean = sum / static_cast<double>(count);
    const double var = std::max(0.0, sum_sq / static_cast<double>(count) - mean * mean);
    const float inv_std = static_cast<float>(1.0 / std::sqrt(var + eps));
    saved.mean[static_cast<size_t>(c)] = static_cast<float>(mean);
    saved.inv_std[static_cast<size_t>(c)] = inv_std;
    running_mean[c] = (1.0f - momentum) * running_mean[c] + momentum * static_cast<float>(mean);
    running_var[c] = (1.0f - momentum) * running_var[c] + momentum * static_cast<float>(var);
    const float g = gamma[c], b = beta[c], m = static_cast<float>(mean);
    for (int n = 0; n < N; ++n) {
      const float* p = in + (static_cast<std::int64_t>(n) * C + c) * plane;
      float* q = o + (static_cast<std::int64_t>(n) * C + c) * plane;
      for (std::int64_t i = 0; i < plane; ++i) q[i] = g * (p[i] - m) * inv_std + b;
    }
  }
  return out;
}

Tensor bn_forward_eval(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                       const Tensor& running_mean, const Tensor& running_var, float eps) {
  check_bn_args(x, gamma, beta);
  const int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
  const std::int64_t plane = static_cast<std::int64_t>(H) * W;
  Tensor out(x.shape());
  const float* in = x.data();
  float* o = out.data();
  for (int c = 0; c < C; ++c) {
    const float m = running_mean[c];
    const float inv_std = 1.0f / std::sqrt(running_var[c] + eps);
    const float g = gamma[c], b = beta[c];
    for (int n = 0; n < N; ++n) {
      const float* p = in + (static_cast<std::int64_t>(n) * C + c) * plane;
      float* q = o + (static_cast<std::int64_t>(n) * C + c) * plane;
      for (std::int64_t i = 0; i < plane; ++i) q[i] = g * (p[i] - m) * inv_std + b;
    }
  }
  return out;
}

BnGrads bn_backward_train(const Tensor& grad_out, const Tensor& x, const Tensor& gamma,
                          const BnBatchStats& saved) {
  const int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
  const std::int64_t plane = static_cast<std::int64_t>(H) * W;
  const double count = static_cast<double>(N) * plane;
  BnGrads grads{Tensor(x.shape()), Tensor({C}), Tensor({C})};
  const float* go = grad_out.data();
  const float* in = x.data();
  for (int c = 0; c < C; ++c) {
    const float m = saved.mean[static_cast<size_t>(c)];
    const float inv_std = saved.inv_std[static_cast<size_t>(c)];
    double sum_go = 0.0, sum_go_xhat = 0.0;
    for (int n = 0; n < N; ++n) {
      const std::int64_t off = (static_cast<std::int64_t>(n) * C + c) * plane;
      for (std::int64_t i = 0; i < plane; ++i) {
        const float xhat = (in[off + i] - m) * inv_std;
        sum_go += go[off + i];
        sum_go_xhat += static_cast<double>(go[off + i]) * xhat;
      }
    }
    grads.grad_beta[c] = static_cast<float>(sum_go);
    grads.grad_gamma[c] = static_cast<float>(sum_go_xhat);
    const float mean_go = static_cast<float>(sum_go / count);
    const float mean_go_xhat = static_cast<float>(sum_go_xhat / count);
    const float g = gamma[c];
    float* gi = grads.grad_input.data();
    for (int n = 0; n < N; ++n) {
      const std::int64_t off = (static_cast<std::int64_t>(n) * C + c) * plane;
      for (std::int64_t i = 0; i < plane; ++i) {
        const float xhat = (in[off + i] - m) * inv_std;
        gi[off + i] = g * inv_std * (go[off + i] - mean_go - xhat * mean_go_xhat);
      }
    }
  }
  return grads;
}

BnGrads bn_backward_eval(const Tensor& grad_out, const Tensor& x, const Tensor& gamma,
                         const Tensor& running_mean, const Tensor& running_var, float eps) {
  const int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
  const std::int64_t plane = static_cast<std::int64_t>(H) * W;
  BnGrads grads{Tensor(x.shape()), Tensor({C}), Tensor({C})};
  const float* go = grad_out.data();
  const float* in = x.data();
  for (int c = 0; c < C; ++c) {
    const float m = running_mean[c];
    const float inv_std = 1.0f / std::sqrt(running_var[c] + eps);
    const float g = gamma[c];
    double sum_go = 0.0, sum_go_xhat = 0.0;
    float* gi = grads.grad_input.data();
    for (int n = 0; n < N; ++n) {
      const std::int64_t off = (static_cast<std::int64_t>(n) * C + c) * plane;
      for (std::int64_t i = 0; i < plane; ++i) {
        const float xhat = (in[off + i] - m) * inv_std;
        sum_go += go[off + i];
        sum_go_xhat += static_cast<double>(go[off + i]) * xhat;
        gi[off + i] = g * inv_std * go[off + i];
      }
    }
    grads.grad_beta[c] = static_cast<float>(sum_go);
    grads.grad_gamma[c] = static_cast<float>(sum_go_xhat);
  }
  return grads;
}

}  // namespace fedgin
