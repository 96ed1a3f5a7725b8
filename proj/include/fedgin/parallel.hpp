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

#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fedgin {

/// Fixed-size worker pool for data-parallel kernel loops. Tasks write
/// disjoint output ranges, so results are identical for any pool size.
class ThreadPool {
 public:
  explicit ThreadPool(int workers);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int size() const { return workers_; }

  /// Runs task(i) for i in [0, n); blocks until all tasks complete.
  /// The calling thread participates.
  void run(int n, const std::function<void(int)>& task);

 private:
  void worker_loop();

  int workers_;
  std::vector<std::thread> threads_;
  std::mutex mu_;
  std::condition_variable cv_start_;
  std::condition_variable cv_done_;
  const std::function<void(int)>* job_ = nullptr;
  int job_n_ = 0;
  std::atomic<int> next_{0};
  int completed_ = 0;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
};

/// Thread-local pool used by kernel loops; null means serial execution.
ThreadPool* current_pool();

/// RAII scope installing a pool as the calling thread's kernel pool.
class PoolScope {
 public:
  explicit PoolScope(ThreadPool* pool);
  ~PoolScope();

 private:
  ThreadPool* previous_;
};

/// Splits [0, n) into chunks executed on the current pool (serial if none).
/// body(begin, end) must only touch outputs in its own range.
void parallel_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body);

}  // namespace fedgin
