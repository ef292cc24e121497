#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cycmzv {

/// Worker count: CYCMZV_JOBS if set and positive, else hardware concurrency.
inline int default_jobs() {
    if (const char* env = std::getenv("CYCMZV_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Maps fn over items on `jobs` threads (0 = default_jobs()). Output order
/// matches input order; the first exception thrown by fn is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn, int jobs = 0) {
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    if (jobs <= 0) jobs = default_jobs();
    jobs = std::min<int>(jobs, static_cast<int>(items.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < items.size(); i = next++) {
                try {
                    out[i] = fn(items[i]);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace cycmzv
