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
#include "fedgin/tensor.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fedgin {

namespace {

std::int64_t checked_numel(const std::vector<int>& shape) {
  std::int64_t n = 1;
  for (int d : shape) {
    if (d < 1) {
      throw std::invalid_argument("Tensor: every dimension must be >= 1, got shape " +
                                  shape_str(shape));
    }
    n *= d;
  }
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<int> shape, float fill)
    : shape_(std::move(shape)), data_(static_cast<size_t>(checked_numel(shape_)), fill) {}

Tensor::Tensor(std::vector<int> shape, std::vector<float> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (checked_numel(shape_) != static_cast<std::int64_t>(data_.size())) {
    throw std::invalid_argument("Tensor: data length " + std::to_string(data_.size()) +
                                " does not match shape " + shape_str(shape_));
  }
}

float& Tensor::at(std::initializer_list<int> idx) {
  return const_cast<float&>(static_cast<const Tensor*>(this)->at(idx));
}

float Tensor::at(std::initializer_list<int> idx) const {
  if (static_cast<int>(idx.size()) != rank()) {
    throw std::invalid_argument("Tensor::at: index rank " + std::to_string(idx.size()) +
                                " vs tensor rank " + std::to_string(rank()));
  }
  std::int64_t flat = 0;
  int i = 0;
  for (int v : idx) {
    if (v < 0 || v >= shape_[static_cast<size_t>(i)]) {
      throw std::out_of_range("Tensor::at: index " + std::to_string(v) + " out of range for dim " +
                              std::to_string(i) + " of shape " + shape_str(shape_));
    }
    flat = flat * shape_[static_cast<size_t>(i)] + v;
    ++i;
  }
  return data_[static_cast<size_t>(flat)];
}

void Tensor::fill(float v) {
  for (float& x : data_) x = v;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  check_same_shape(*this, other, "Tensor::operator+=");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  check_same_shape(*this, other, "Tensor::operator-=");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(float s) {
  for (float& x : data_) x *= s;
  return *this;
}

double Tensor::frobenius_norm() const {
  double acc = 0.0;
  for (float x : data_) acc += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(acc);
}

double Tensor::sum() const {
  double acc = 0.0;
  for (float x : data_) acc += x;
  return acc;
}

float Tensor::max_abs() const {
  float m = 0.0f;
  for (float x : data_) m = std::max(m, std::fabs(x));
  return m;
}

bool Tensor::all_finite() const {
  for (float x : data_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

std::string Tensor::shape_str() const { return fedgin::shape_str(shape_); }

std::string shape_str(const std::vector<int>& shape) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << 'x';
    os << shape[i];
  }
  os << ']';
  return os.str();
}

void check_same_shape(const Tensor& a, const Tensor& b, const char* context) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(std::string(context) + ": shape mismatch " + a.shape_str() +
                                " vs " + b.shape_str());
  }
}

// --- FGT1 serialization --------------------------------------------------

namespace {

constexpr char kTensorMagic[4] = {'F', 'G', 'T', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw std::runtime_error("tensor read: truncated stream while reading u32");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void write_tensor(std::ostream& os, const Tensor& t) {
  os.write(kTensorMagic, 4);
  put_u32(os, static_cast<std::uint32_t>(t.rank()));
  for (int d : t.shape()) put_u32(os, static_cast<std::uint32_t>(d));
  static_assert(sizeof(float) == 4);
  for (std::int64_t i = 0; i < t.numel(); ++i) {
    std::uint32_t bits;
    float v = t[i];
    std::memcpy(&bits, &v, 4);
    put_u32(os, bits);
  }
}

Tensor read_tensor(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kTensorMagic, 4) != 0) {
    throw std::runtime_error("tensor read: bad magic, expected FGT1");
  }
  std::uint32_t rank = get_u32(is);
  if (rank > 8) throw std::runtime_error("tensor read: implausible rank " + std::to_string(rank));
  std::vector<int> shape(rank);
  std::int64_t n = 1;
  for (auto& d : shape) {
    std::uint32_t v = get_u32(is);
    if (v == 0 || v > (1u << 28)) {
      throw std::runtime_error("tensor read: bad dimension " + std::to_string(v));
    }
    d = static_cast<int>(v);
    n *= d;
  }
  std::vector<float> data(static_cast<size_t>(n));
  for (auto& x : data) {
    std::uint32_t bits = get_u32(is);
    std::memcpy(&x, &bits, 4);
  }
  return Tensor(std::move(shape), std::move(data));
}

std::vector<std::uint8_t> tensor_to_bytes(const Tensor& t) {
  std::ostringstream os(std::ios::binary);
  write_tensor(os, t);
  const std::string& s = os.str();
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

Tensor tensor_from_bytes(const std::uint8_t* data, size_t size) {
  std::istringstream is(std::string(reinterpret_cast<const char*>(data), size), std::ios::binary);
  return read_tensor(is);
}

void save_tensor(const std::string& path, const Tensor& t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("save_tensor: cannot open " + path);
  write_tensor(os, t);
  if (!os) throw std::runtime_error("save_tensor: write failed for " + path);
}

Tensor load_tensor(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load_tensor: cannot open " + path);
  return read_tensor(is);
}

}  // namespace fedgin
