#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace rtri {

inline unsigned resolve_threads(int threads) {
    if (threads > 0) return static_cast<unsigned>(threads);
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Splits [0, total) into fixed chunks claimed from an atomic counter and runs
// fn(begin, end, slot) on nthreads workers; slot < nthreads identifies the
// worker for per-thread accumulators. Callers must merge with commutative,
// associative operations only, so results are schedule-independent.
template <class Fn>
void parallel_chunks(std::uint64_t total, unsigned nthreads, std::uint64_t chunk, Fn&& fn) {
    if (total == 0) return;
    if (chunk == 0) chunk = 1;
    const std::uint64_t nchunks = (total + chunk - 1) / chunk;
    if (nthreads <= 1 || nchunks == 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c)
            fn(c * chunk, std::min(total, (c + 1) * chunk), 0u);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&](unsigned slot) {
        for (;;) {
            std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= nchunks) break;
            fn(c * chunk, std::min(total, (c + 1) * chunk), slot);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads - 1);
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();
}

} // namespace rtri
