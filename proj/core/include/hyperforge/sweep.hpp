/*
 * Copyright 2026 The Hyperforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hyperforge {

/// Knobs shared by every exhaustive checker sweep.
///
/// jobs <= 0 means "use hardware concurrency". Results are deterministic for
/// any job count: first-hit sweeps return the lowest hit index, collecting
/// sweeps return hits in ascending order.
struct SweepOptions {
    int jobs = 1;
    bool collect_all = false;
};

namespace detail {

inline int effective_jobs(int jobs, std::size_t n) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    const std::size_t per_block = 1024;
    const std::size_t blocks = (n + per_block - 1) / per_block;
    if (static_cast<std::size_t>(jobs) > blocks) jobs = static_cast<int>(blocks ? blocks : 1);
    return jobs;
}

/// Lowest i in [0, n) with pred(i), or n. Workers pull fixed-size blocks and
/// skip any block that starts past the best hit found so far, so the minimum
/// is exact regardless of scheduling.
template <typename Pred>
std::size_t parallel_find_first(std::size_t n, int jobs, Pred&& pred) {
    const std::size_t block = 1024;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{n};
    std::mutex err_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(block);
                if (begin >= n || begin >= best.load()) break;
                const std::size_t end = begin + block < n ? begin + block : n;
                for (std::size_t i = begin; i < end && i < best.load(); ++i) {
                    if (pred(i)) {
                        std::size_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!error) error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs) - 1);
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return best.load();
}

}  // namespace detail

/// Scan [0, n) for indices where pred(i) is true.
///
/// With collect_all unset, returns at most one index (the lowest hit); with it
/// set, returns every hit in ascending order. Byte-identical output for any
/// jobs value.
template <typename Pred>
std::vector<std::size_t> scan_hits(std::size_t n, const SweepOptions& opt, Pred&& pred) {
    const int jobs = detail::effective_jobs(opt.jobs, n);
    std::vector<std::size_t> hits;

    if (!opt.collect_all) {
        std::size_t i;
        if (jobs == 1) {
            for (i = 0; i < n; ++i)
                if (pred(i)) break;
        } else {
            i = detail::parallel_find_first(n, jobs, pred);
        }
        if (i < n) hits.push_back(i);
        return hits;
    }

    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i)
            if (pred(i)) hits.push_back(i);
        return hits;
    }

    // Contiguous ranges per worker, concatenated in range order.
    std::vector<std::vector<std::size_t>> parts(static_cast<std::size_t>(jobs));
    std::mutex err_mutex;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
        const std::size_t begin = n * static_cast<std::size_t>(t) / static_cast<std::size_t>(jobs);
        const std::size_t end = n * (static_cast<std::size_t>(t) + 1) / static_cast<std::size_t>(jobs);
        pool.emplace_back([&, t, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i)
                    if (pred(i)) parts[static_cast<std::size_t>(t)].push_back(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    for (auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
    return hits;
}

}  // namespace hyperforge
