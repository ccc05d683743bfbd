#pragma once

#include <atomic>
#include <mutex>
#include <cstddef>
#include <thread>
#include <vector>

namespace conehull {

// Evaluates fn(0..n-1) into a dense result vector. Replicate i derives its
// own seed, so the slot content does not depend on scheduling; the caller's
// sequential reduction then makes the final numbers identical for any worker
// count.
template <class F>
auto map_replicates(std::size_t n, int workers, F&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> results(n);
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    pool.reserve(static_cast<std::size_t>(count));
    for (int w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

} // namespace conehull
