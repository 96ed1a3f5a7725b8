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
#include <iosfwd>
#include <string>
#include <vector>

namespace fedgin {

/// Dense n-dimensional float32 array, row-major contiguous.
/// Image tensors use [N, C, H, W] order.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape, float fill = 0.0f);
  Tensor(std::vector<int> shape, std::vector<float> data);

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int> shape, float v) { return Tensor(std::move(shape), v); }
  static Tensor scalar(float v) { return Tensor({1}, v); }

  int rank() const { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  int dim(int i) const { return shape_.at(static_cast<size_t>(i)); }
  std::int64_t numel() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }
  std::vector<float>& vec() { return data_; }
  const std::vector<float>& vec() const { return data_; }

  float& operator[](std::int64_t i) { return data_[static_cast<size_t>(i)]; }
  float operator[](std::int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // Multi-index access with bounds checks; for tests and cold paths.
  float& at(std::initializer_list<int> idx);
  float at(std::initializer_list<int> idx) const;

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  void fill(float v);
  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(float s);

  /// sqrt of sum of squares over all elements; accumulated in double.
  double frobenius_norm() const;
  double sum() const;
  float max_abs() const;
  bool all_finite() const;

  std::string shape_str() const;

 private:
  std::vector<int> shape_;
  std::vector<float> data_;
};

std::string shape_str(const std::vector<int>& shape);

/// Throws std::invalid_argument unless both shapes are identical.
void check_same_shape(const Tensor& a, const Tensor& b, const char* context);

// --- binary serialization (FGT1) ---------------------------------------
// magic "FGT1", u32 rank, u32 dims (little-endian), raw little-endian f32.

void write_tensor(std::ostream& os, const Tensor& t);
Tensor read_tensor(std::istream& is);

std::vector<std::uint8_t> tensor_to_bytes(const Tensor& t);
Tensor tensor_from_bytes(const std::uint8_t* data, size_t size);

void save_tensor(const std::string& path, const Tensor& t);
Tensor load_tensor(const std::string& path);

}  // namespace fedgin
