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
#include "fedgin/parallel.hpp"

#include <algorithm>

namespace fedgin {

namespace {
thread_local ThreadPool* g_current_pool = nullptr;
}

ThreadPool::ThreadPool(int workers) : workers_(std::max(1, workers)) {
  for (int i = 1; i < workers_; ++i) {
    threads_.emplace_back([this] { worker_loop(); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  cv_start_.notify_all();
  for (auto& t : threads_) t.join();
}

void ThreadPool::worker_loop() {
  std::uint64_t seen = 0;
  while (true) {
    const std::function<void(int)>* job;
    int n;
    {
      std::unique_lock<std::mutex> lock(mu_);
      cv_start_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      job = job_;
      n = job_n_;
    }
    int done = 0;
    for (;;) {
      int i = next_.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) break;
      (*job)(i);
      ++done;
    }
    if (done > 0) {
      std::lock_guard<std::mutex> lock(mu_);
      completed_ += done;
      if (completed_ == n) cv_done_.notify_all();
    } else {
      std::lock_guard<std::mutex> lock(mu_);
      if (completed_ == n) cv_done_.notify_all();
    }
  }
}

void ThreadPool::run(int n, const std::function<void(int)>& task) {
  if (n <= 0) return;
  if (threads_.empty() || n == 1) {
    for (int i = 0; i < n; ++i) task(i);
    return;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    job_ = &task;
    job_n_ = n;
    next_.store(0, std::memory_order_relaxed);
    completed_ = 0;
    ++generation_;
  }
  cv_start_.notify_all();
  int done = 0;
  for (;;) {
    int i = next_.fetch_add(1, std::memory_order_relaxed);
    if (i >= n) break;
    task(i);
    ++done;
  }
  std::unique_lock<std::mutex> lock(mu_);
  completed_ += done;
  if (completed_ == n) {
    cv_done_.notify_all();
    return;
  }
  cv_done_.wait(lock, [&] { return completed_ == job_n_; });
}

ThreadPool* current_pool() { return g_current_pool; }

PoolScope::PoolScope(ThreadPool* pool) : previous_(g_current_pool) { g_current_pool = pool; }

PoolScope::~PoolScope() { g_current_pool = previous_; }

void parallel_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body) {
  ThreadPool* pool = g_current_pool;
  if (n <= 0) return;
  if (pool == nullptr || pool->size() <= 1 || n == 1) {
    body(0, n);
    return;
  }
  const int chunks = static_cast<int>(std::min<std::int64_t>(n, pool->size() * 2));
  const std::int64_t per = (n + chunks - 1) / chunks;
  pool->run(chunks, [&](int c) {
    const std::int64_t begin = c * per;
    const std::int64_t end = std::min<std::int64_t>(n, begin + per);
    if (begin < end) body(begin, end);
  });
}

}  // namespace fedgin
