// Copyright 2026 The ncg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace ncg {

// Worker count: NCG_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
inline std::size_t thread_count() {
  if (const char* env = std::getenv("NCG_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(i) for i in [0, count) across worker threads. Results are stored
// by index, so the output never depends on scheduling. The first exception
// (lowest index) is rethrown.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, Fn&& fn, std::size_t threads = thread_count()) {
  std::vector<Result> results(count);
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          results[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// Lowest index i in [0, count) for which fn(i) yields a value, together with
// that value. Workers stop claiming indices above the best hit found so far,
// and the answer matches a sequential scan regardless of thread count.
template <class Value, class Fn>
std::optional<std::pair<std::size_t, Value>> parallel_find_first(std::size_t count, Fn&& fn,
                                                                 std::size_t threads = thread_count()) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (std::optional<Value> v = fn(i)) return std::pair{i, std::move(*v)};
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> cutoff{count};
  std::mutex mu;
  std::optional<std::pair<std::size_t, Value>> best;
  std::exception_ptr error;
  std::size_t error_index = count;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cutoff.load(); i = next++) {
        try {
          std::optional<Value> v = fn(i);
          if (!v) continue;
          std::lock_guard lock(mu);
          if (!best || i < best->first) best.emplace(i, std::move(*v));
          std::size_t c = cutoff.load();
          while (i < c && !cutoff.compare_exchange_weak(c, i)) {
          }
        } catch (...) {
          std::lock_guard lock(mu);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
          std::size_t c = cutoff.load();
          while (i < c && !cutoff.compare_exchange_weak(c, i)) {
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error && (!best || error_index < best->first)) std::rethrow_exception(error);
  return best;
}

}  // namespace ncg
