#pragma once

/**
 * @file parallel.hpp
 * @brief Thread-cap aware parallel loop.
 *
 * The effective worker count is min(OKOUNKOV_THREADS, hardware concurrency),
 * overridable in-process for determinism tests. Work items are claimed from
 * an atomic counter; callers must write results into per-index slots so the
 * aggregate is independent of execution order.
 */

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "okounkov/errors.hpp"

namespace okounkov {

namespace detail {
inline std::atomic<unsigned>& thread_override() {
    static std::atomic<unsigned> value{0};  // 0: no override
    return value;
}
}  // namespace detail

/// Caps the worker count in-process (0 restores the environment-driven value).
inline void set_thread_cap(unsigned n) { detail::thread_override().store(n); }

inline unsigned thread_cap() {
    unsigned forced = detail::thread_override().load();
    if (forced > 0) return forced;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("OKOUNKOV_THREADS")) {
        try {
            long v = std::stol(env);
            if (v < 1) throw error("OKOUNKOV_THREADS must be a positive integer");
            return static_cast<unsigned>(std::min<long>(v, hw));
        } catch (const std::invalid_argument&) {
            throw error("OKOUNKOV_THREADS must be a positive integer");
        } catch (const std::out_of_range&) {
            throw error("OKOUNKOV_THREADS out of range");
        }
    }
    return hw;
}

/// Runs fn(i) for i in [0, n). Exceptions from workers are rethrown (the
/// first one wins); remaining items are still drained so threads join.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_cap(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                if (failed.load()) continue;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!failed.exchange(true)) first_error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(first_error);
}

}  // namespace okounkov
