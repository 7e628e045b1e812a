#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace geocut {

// Runs fn(i) once for every i in [0, total) using at most `threads` workers.
// Results must be written into per-index slots by the caller; with that
// convention the outcome is identical for any thread count. fn must not throw.
template <typename Fn>
void parallel_for(std::size_t total, int threads, Fn&& fn) {
    if (threads <= 1 || total <= 1) {
        for (std::size_t i = 0; i < total; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), total);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&next, total, &fn] {
            for (std::size_t i; (i = next.fetch_add(1)) < total;) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace geocut
