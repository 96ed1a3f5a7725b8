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
#include <vector>

#include "fedgin/tensor.hpp"

namespace fedgin {

/// Flat ordered collection of named tensors: trainable weights plus
/// normalization buffers (running statistics). Iteration order is the
/// construction order and is identical for every model built from the same
/// config, which federated aggregation relies on.
class ModelParams {
 public:
  struct Entry {
    std::string name;
    Tensor tensor;
    bool trainable = true;
  };

  void add(std::string name, Tensor tensor, bool trainable = true);

  bool has(const std::string& name) const { return index_.count(name) > 0; }
  Tensor& at(const std::string& name);
  const Tensor& at(const std::string& name) const;

  std::vector<Entry>& entries() { return entries_; }
  const std::vector<Entry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  std::int64_t total_elements() const;

  /// True when both hold the same names, order, shapes and trainable flags.
  bool same_schema(const ModelParams& other) const;

  /// Name of the first entry whose name/shape differs, or empty string.
  std::string first_schema_mismatch(const ModelParams& other) const;

 private:
  std::vector<Entry> entries_;
  std::map<std::string, size_t> index_;
};

}  // namespace fedgin
