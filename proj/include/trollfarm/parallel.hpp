#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace trollfarm {

// Worker count: TROLLFARM_THREADS if set and positive, else hardware
// concurrency (at least 1).
inline int worker_count() {
    if (const char* env = std::getenv("TROLLFARM_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n) across workers. Each index is processed exactly
// once; fn must only write to index-owned state so that results are
// independent of scheduling.
inline void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
    const int workers = std::min<std::int64_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::int64_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace trollfarm
