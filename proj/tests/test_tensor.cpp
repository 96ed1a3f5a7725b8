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

#include <cstdio>
#include <sstream>

#include "fedgin/rng.hpp"
#include "fedgin/tensor.hpp"
#include "testing_util.hpp"

using namespace fedgin;

TEST_CASE("tensor shape invariants") {
  Tensor t({2, 3, 4});
  CHECK(t.numel() == 24);
  CHECK(t.rank() == 3);
  CHECK_THROWS_AS(Tensor({2, 0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Tensor({-1}), std::invalid_argument);
  CHECK_THROWS_AS(Tensor({2, 2}, std::vector<float>{1.0f, 2.0f, 3.0f}), std::invalid_argument);
}

TEST_CASE("frobenius norm basics") {
  CHECK(Tensor({3, 3}).frobenius_norm() == 0.0);
  Tensor v({2}, {3.0f, 4.0f});
  CHECK(v.frobenius_norm() == doctest::Approx(5.0).epsilon(1e-9));
  Tensor ones({2, 2}, 1.0f);
  CHECK(ones.frobenius_norm() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("frobenius norm absolute homogeneity") {
  Rng rng = make_rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Tensor x = testing::random_tensor(rng, {3, 5, 7});
    const float alpha = uniform(rng, -4.0f, 4.0f);
    Tensor scaled = x;
    scaled *= alpha;
    const double lhs = scaled.frobenius_norm();
    const double rhs = std::fabs(alpha) * x.frobenius_norm();
    CHECK(std::fabs(lhs - rhs) <= 1e-6 * std::max(1.0, rhs));
  }
}

TEST_CASE("tensor serialization round trip") {
  Rng rng = make_rng(5);
  Tensor t = testing::random_tensor(rng, {2, 3, 5, 4});
  std::ostringstream os(std::ios::binary);
  write_tensor(os, t);
  std::istringstream is(os.str(), std::ios::binary);
  Tensor back = read_tensor(is);
  REQUIRE(back.shape() == t.shape());
  for (std::int64_t i = 0; i < t.numel(); ++i) CHECK(back[i] == t[i]);
}

TEST_CASE("tensor serialization header layout") {
  Tensor t({1, 2}, {1.5f, -2.0f});
  auto bytes = tensor_to_bytes(t);
  REQUIRE(bytes.size() == 4 + 4 + 2 * 4 + 2 * 4);
  CHECK(bytes[0] == 'F');
  CHECK(bytes[1] == 'G');
  CHECK(bytes[2] == 'T');
  CHECK(bytes[3] == '1');
  // rank 2, little-endian
  CHECK(bytes[4] == 2);
  CHECK(bytes[5] == 0);
  // dims 1, 2
  CHECK(bytes[8] == 1);
  CHECK(bytes[12] == 2);
}

TEST_CASE("tensor deserialization rejects corrupt input") {
  Tensor t({3}, {1.0f, 2.0f, 3.0f});
  auto bytes = tensor_to_bytes(t);
  SUBCASE("bad magic") {
    bytes[0] = 'X';
    CHECK_THROWS_AS(tensor_from_bytes(bytes.data(), bytes.size()), std::runtime_error);
  }
  SUBCASE("truncated payload") {
    CHECK_THROWS_AS(tensor_from_bytes(bytes.data(), bytes.size() - 3), std::runtime_error);
  }
}

TEST_CASE("tensor file io") {
  Rng rng = make_rng(11);
  Tensor t = testing::random_tensor(rng, {4, 4});
  const std::string path = "test_tensor_io.fgt";
  save_tensor(path, t);
  Tensor back = load_tensor(path);
  CHECK(back.shape() == t.shape());
  for (std::int64_t i = 0; i < t.numel(); ++i) CHECK(back[i] == t[i]);
  std::remove(path.c_str());
}
