// Copyright 2026 The pqcsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PQC_PARALLEL_HPP
#define PQC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pqc {

/// Runs body(i) for i in [0, count) on up to `workers` threads.
///
/// Tasks are handed out from a shared counter, so any result that must be independent of
/// scheduling has to be written into a slot keyed by i and merged afterwards in index order.
/// The first exception thrown by any task is rethrown on the calling thread.
template <typename Body>
void parallel_for(size_t count, unsigned workers, Body &&body) {
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        while (true) {
            size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(count);
            }
        }
    };
    size_t n_threads = std::min<size_t>(workers, count);
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads - 1);
        for (size_t t = 1; t < n_threads; ++t) {
            pool.emplace_back(run);
        }
        run();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace pqc

#endif
