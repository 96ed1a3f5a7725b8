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
#include "fedgin/params.hpp"

#include <stdexcept>

namespace fedgin {

void ModelParams::add(std::string name, Tensor tensor, bool trainable) {
  if (index_.count(name)) {
    throw std::invalid_argument("ModelParams: duplicate parameter name '" + name + "'");
  }
  index_.emplace(name, entries_.size());
  entries_.push_back(Entry{std::move(name), std::move(tensor), trainable});
}

Tensor& ModelParams::at(const std::string& name) {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw std::out_of_range("ModelParams: no parameter named '" + name + "'");
  }
  return entries_[it->second].tensor;
}

const Tensor& ModelParams::at(const std::string& name) const {
  return const_cast<ModelParams*>(this)->at(name);
}

std::int64_t ModelParams::total_elements() const {
  std::int64_t n = 0;
  for (const auto& e : entries_) n += e.tensor.numel();
  return n;
}

bool ModelParams::same_schema(const ModelParams& other) const {
  return first_schema_mismatch(other).empty();
}

std::string ModelParams::first_schema_mismatch(const ModelParams& other) const {
  const size_t n = std::min(entries_.size(), other.entries_.size());
  for (size_t i = 0; i < n; ++i) {
    const Entry& a = entries_[i];
    const Entry& b = other.entries_[i];
    if (a.name != b.name) return a.name + " vs " + b.name;
    if (a.tensor.shape() != b.tensor.shape()) return a.name;
    if (a.trainable != b.trainable) return a.name;
  }
  if (entries_.size() != other.entries_.size()) {
    const auto& longer = entries_.size() > other.entries_.size() ? entries_ : other.entries_;
    return longer[n].name;
  }
  return {};
}

}  // namespace fedgin
