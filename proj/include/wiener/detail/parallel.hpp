#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wiener::detail {

/// Runs fn(i) for every i in [0, count), split into contiguous chunks over
/// worker threads. fn must confine its writes to per-index slots; results
/// are then independent of scheduling. With parallel == false everything
/// runs on the calling thread in index order.
template <typename Fn>
void parallel_for(std::size_t count, bool parallel, Fn&& fn) {
    if (count == 0) {
        return;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    // At least two workers in parallel mode, so the threaded path is
    // exercised even on single-core hosts.
    const std::size_t workers =
        parallel ? std::max<std::size_t>(2, std::min<std::size_t>(hw ? hw : 2, count))
                 : 1;
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) {
                    fn(i);
                }
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

} // namespace wiener::detail
