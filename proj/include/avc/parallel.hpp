#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace avc {

// Worker count: explicit argument wins, then AVCLAB_THREADS, then 1.
// Single-threaded default keeps runs reproducible by construction; results
// are index-deterministic either way.
inline int default_thread_count() {
    if (const char* env = std::getenv("AVCLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// Runs fn(i) for i in [0, n). Results must be written to per-index slots;
// the reduction order is left to the caller, so schedules cannot change
// outcomes.
template <typename Fn>
void parallel_for(size_t n, const Fn& fn, int threads = 0) {
    if (threads <= 0) threads = default_thread_count();
    if (threads == 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    size_t workers = std::min<size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace avc
